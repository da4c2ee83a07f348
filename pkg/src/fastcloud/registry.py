"""Data model and file-backed store for QoS attributes, SLO and AMV submissions.

The store keeps three human-diffable CSV files (attributes.csv, slos.csv,
amvs.csv) under one directory and rewrites them atomically (write to a temp
file, then rename). Reads need no coordination; mutations are serialized
through a single lock.
"""

from __future__ import annotations

import csv
import enum
import io
import os
import re
import tempfile
import threading
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, TextIO


class Polarity(enum.Enum):
    """Whether a higher attribute value is better (benefit) or worse (cost)."""

    BENEFIT = "benefit"
    COST = "cost"


class UnknownAttributeError(ValueError):
    """A record references an attribute that is not registered."""


class MissingSloError(ValueError):
    """A monitored value was submitted for a triple with no agreed objective."""


@dataclass(frozen=True, slots=True)
class QosAttribute:
    name: str
    abbreviation: str
    unit: str
    polarity: Polarity


@dataclass(frozen=True, slots=True)
class SloRecord:
    """Agreed service-level objective for one (provider, consumer, attribute)."""

    csp_id: str
    csc_id: str
    attribute: str
    value: float

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError(f"SLO value must be positive, got {self.value}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.csp_id, self.csc_id, self.attribute)


@dataclass(frozen=True, slots=True)
class AmvRecord:
    """One monitored observation; sequence orders submissions within a triple."""

    csp_id: str
    csc_id: str
    attribute: str
    value: float
    sequence: int | None = None

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"monitored value must be nonnegative, got {self.value}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.csp_id, self.csc_id, self.attribute)


# The six attributes of the standard web-service QoS dataset layout.
STANDARD_ATTRIBUTES = (
    QosAttribute("availability", "av", "%", Polarity.BENEFIT),
    QosAttribute("throughput", "th", "invokes/s", Polarity.BENEFIT),
    QosAttribute("successability", "su", "%", Polarity.BENEFIT),
    QosAttribute("reliability", "re", "%", Polarity.BENEFIT),
    QosAttribute("latency", "la", "ms", Polarity.COST),
    QosAttribute("response_time", "res", "ms", Polarity.COST),
)

# Dataset column -> attribute abbreviation, for the same standard layout.
STANDARD_QWS_MAPPING = {
    "Availability": "av",
    "Throughput": "th",
    "Successability": "su",
    "Reliability": "re",
    "Latency": "la",
    "Response Time": "res",
}


@dataclass
class Registry:
    """In-memory registry of attributes, SLO records and AMV records.

    Attributes are keyed by name and by abbreviation (both must be unique).
    SLO records replace on resubmission of the same (csp, csc, attribute)
    triple; AMV records append.
    """

    attributes: dict[str, QosAttribute] = field(default_factory=dict)
    slos: dict[tuple[str, str, str], SloRecord] = field(default_factory=dict)
    amvs: list[AmvRecord] = field(default_factory=list)

    # -- attribute handling ------------------------------------------------

    def register_attribute(self, attr: QosAttribute) -> None:
        existing = self.attributes.get(attr.name)
        if existing is not None and existing.polarity is not attr.polarity:
            raise ValueError(f"attribute {attr.name!r} already registered with different polarity")
        for other in self.attributes.values():
            if other.name != attr.name and other.abbreviation == attr.abbreviation:
                raise ValueError(f"abbreviation {attr.abbreviation!r} already used by {other.name!r}")
        self.attributes[attr.name] = attr

    def resolve_attribute(self, name: str) -> QosAttribute:
        """Look up an attribute by name or abbreviation."""
        attr = self.attributes.get(name)
        if attr is None:
            for candidate in self.attributes.values():
                if candidate.abbreviation == name:
                    return candidate
            raise UnknownAttributeError(f"unknown attribute {name!r}")
        return attr

    # -- derived entity sets ----------------------------------------------

    @property
    def providers(self) -> set[str]:
        return {r.csp_id for r in self.slos.values()}

    @property
    def consumers(self) -> set[str]:
        return {r.csc_id for r in self.slos.values()}

    def consumers_of(self, csp_id: str) -> set[str]:
        return {r.csc_id for r in self.slos.values() if r.csp_id == csp_id}

    # -- submissions --------------------------------------------------------

    def submit_slo(self, record: SloRecord) -> bool:
        """Store an agreed objective; returns True if it replaced a prior one."""
        attr = self.resolve_attribute(record.attribute)
        if record.attribute != attr.name:
            record = replace(record, attribute=attr.name)
        replaced = record.key in self.slos
        self.slos[record.key] = record
        return replaced

    def submit_amv(self, record: AmvRecord) -> AmvRecord:
        """Append a monitored value; requires a matching SLO for the triple.

        A record without a sequence gets the next per-triple index. A record
        carrying an explicit sequence is the file/import path: an identical
        record already present is a no-op signalled by ValueError("duplicate"),
        and the same key with a different value is a conflict.
        """
        attr = self.resolve_attribute(record.attribute)
        if record.attribute != attr.name:
            record = replace(record, attribute=attr.name)
        if record.key not in self.slos:
            raise MissingSloError(
                f"no agreed SLO for ({record.csp_id}, {record.csc_id}, {record.attribute})"
            )
        return self._append_amv(record)

    def _append_amv(self, record: AmvRecord) -> AmvRecord:
        if record.sequence is None:
            record = replace(record, sequence=self.next_sequence(record.key))
        else:
            existing = self._find_amv(record.key, record.sequence)
            if existing is not None:
                if existing.value == record.value:
                    raise ValueError(
                        f"duplicate submission {record.key} sequence {record.sequence}"
                    )
                raise ValueError(
                    f"sequence {record.sequence} for {record.key} already holds "
                    f"value {existing.value}, refusing to overwrite with {record.value}"
                )
        self.amvs.append(record)
        return record

    def next_sequence(self, key: tuple[str, str, str]) -> int:
        return 1 + max((r.sequence or 0 for r in self.amvs if r.key == key), default=0)

    def _find_amv(self, key: tuple[str, str, str], sequence: int) -> AmvRecord | None:
        for r in self.amvs:
            if r.key == key and r.sequence == sequence:
                return r
        return None

    def amv_samples(self, csp_id: str, csc_id: str, attribute: str) -> list[float]:
        """Monitored values for one triple, in submission order."""
        key = (csp_id, csc_id, attribute)
        return [r.value for r in sorted(
            (r for r in self.amvs if r.key == key), key=lambda r: r.sequence or 0
        )]

    def slos_for(self, csp_id: str, attribute: str) -> list[SloRecord]:
        return [r for r in self.slos.values()
                if r.csp_id == csp_id and r.attribute == attribute]


@dataclass(frozen=True)
class ImportSummary:
    rows_accepted: int
    rows_rejected: int
    records_added: int
    records_skipped: int
    rejections: tuple[str, ...] = ()

    def __str__(self) -> str:
        return (f"{self.rows_accepted} rows accepted, {self.rows_rejected} rejected; "
                f"{self.records_added} records added, {self.records_skipped} duplicates skipped")


def _slugify(text: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9_.-]+", "-", text.strip()).strip("-")
    return slug or "service"


def import_qws(
    registry: Registry,
    source: TextIO,
    mapping: dict[str, str] | None = None,
    service_column: str = "Service Name",
) -> ImportSummary:
    """Import a delimiter-separated QoS dataset as monitored values.

    Each accepted row yields one AmvRecord per mapped column. The dataset
    carries no provider/consumer identities, so the provider id is derived
    from the service-identity column and a single synthetic consumer id is
    used per service; the per-attribute sequence is the row's 1-based index
    within its service group. Re-importing the same file regenerates the
    same records, which are skipped as duplicates.

    Rows with missing or non-numeric values in a mapped column are counted
    and reported, not fatal. These are bulk third-party observations, so no
    agreed SLO is required (unlike ``Registry.submit_amv``).
    """
    mapping = dict(mapping or STANDARD_QWS_MAPPING)
    reader = csv.DictReader(source)
    if reader.fieldnames is None:
        raise ValueError("import source is empty: no header row")
    header = [h.strip() for h in reader.fieldnames]
    missing = [col for col in mapping if col not in header]
    if missing:
        raise ValueError(f"mapped columns missing from header: {', '.join(sorted(missing))}")
    if service_column not in header:
        raise ValueError(f"service identity column {service_column!r} missing from header")
    # resolve targets up front so a bad mapping fails before any mutation
    targets = {col: registry.resolve_attribute(attr).name for col, attr in mapping.items()}

    accepted = rejected = added = skipped = 0
    rejections: list[str] = []
    group_counts: dict[str, int] = {}
    for line_no, row in enumerate(reader, start=2):
        row = {(k.strip() if k else k): v for k, v in row.items()}
        service = (row.get(service_column) or "").strip()
        if not service:
            rejected += 1
            rejections.append(f"line {line_no}: missing service identity")
            continue
        try:
            values = {targets[col]: float(row[col]) for col in mapping}
        except (TypeError, ValueError):
            rejected += 1
            rejections.append(f"line {line_no}: non-numeric or missing value in mapped column")
            continue
        if any(v < 0 for v in values.values()):
            rejected += 1
            rejections.append(f"line {line_no}: negative monitored value")
            continue
        csp_id = _slugify(service)
        csc_id = f"{csp_id}/monitor"
        group_counts[csp_id] = group_counts.get(csp_id, 0) + 1
        sequence = group_counts[csp_id]
        accepted += 1
        for attr_name, value in values.items():
            record = AmvRecord(csp_id, csc_id, attr_name, value, sequence)
            try:
                registry._append_amv(record)
                added += 1
            except ValueError:
                skipped += 1
    return ImportSummary(accepted, rejected, added, skipped, tuple(rejections))


class Store:
    """Directory-backed persistence for a registry.

    One CSV file per record kind; every save rewrites the affected file via
    a temp file and atomic rename, so a crash never leaves a half-written
    store. Mutations are funnelled through one lock.
    """

    ATTRIBUTES_FILE = "attributes.csv"
    SLOS_FILE = "slos.csv"
    AMVS_FILE = "amvs.csv"

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._lock = threading.Lock()

    def load(self) -> Registry:
        registry = Registry()
        path = self.root / self.ATTRIBUTES_FILE
        if path.exists():
            with path.open(newline="", encoding="utf-8") as fh:
                for row in csv.DictReader(fh):
                    registry.register_attribute(QosAttribute(
                        row["name"], row["abbreviation"], row["unit"],
                        Polarity(row["polarity"]),
                    ))
        path = self.root / self.SLOS_FILE
        if path.exists():
            with path.open(newline="", encoding="utf-8") as fh:
                for row in csv.DictReader(fh):
                    record = SloRecord(row["csp_id"], row["csc_id"],
                                       row["attribute"], float(row["value"]))
                    registry.slos[record.key] = record
        path = self.root / self.AMVS_FILE
        if path.exists():
            with path.open(newline="", encoding="utf-8") as fh:
                for row in csv.DictReader(fh):
                    registry.amvs.append(AmvRecord(
                        row["csp_id"], row["csc_id"], row["attribute"],
                        float(row["value"]), int(row["sequence"]),
                    ))
        return registry

    def save(self, registry: Registry) -> None:
        with self._lock:
            self.root.mkdir(parents=True, exist_ok=True)
            self._write(self.ATTRIBUTES_FILE,
                        ["name", "abbreviation", "unit", "polarity"],
                        ([a.name, a.abbreviation, a.unit, a.polarity.value]
                         for a in registry.attributes.values()))
            self._write(self.SLOS_FILE,
                        ["csp_id", "csc_id", "attribute", "value"],
                        ([r.csp_id, r.csc_id, r.attribute, repr(r.value)]
                         for r in registry.slos.values()))
            self._write(self.AMVS_FILE,
                        ["csp_id", "csc_id", "attribute", "value", "sequence"],
                        ([r.csp_id, r.csc_id, r.attribute, repr(r.value), r.sequence]
                         for r in registry.amvs))

    def _write(self, name: str, header: list[str], rows: Iterable[list]) -> None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        fd, tmp_path = tempfile.mkstemp(dir=self.root, prefix=name + ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(buf.getvalue())
            os.replace(tmp_path, self.root / name)
        except BaseException:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)
            raise
