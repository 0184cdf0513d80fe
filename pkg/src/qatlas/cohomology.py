"""Representation tables of H^*(Q[2]) and what can be read off them.

Poincare polynomials of the quotients come from summing, row by row, the
multiplicities of the constituents of each structure's permutation
character.  Point counts follow from minimal purity:
``#Q(F_q) = sum_i (-1)^i h^i q^(6-i)``.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from math import factorial
from pathlib import Path

from .polynomial import IntPolynomial

ROWS = tuple(f"H{i}" for i in range(7))
TABLE_NAMES = ("Sp6_level2", "Sp6_btg_level2", "S7_level2")
GROUP_TAGS = {"Sp6_level2": "Sp6", "Sp6_btg_level2": "Sp6", "S7_level2": "S7"}
# dim H^0 of each table: Q[2] is connected, Q_btg[2] has one component per bitangent
H0_DIMENSION = {"Sp6_level2": 1, "Sp6_btg_level2": 28, "S7_level2": 1}

# structure -> number of such structures on a quartic (the index of its stabilizer)
STRUCTURE_COUNT = {
    "bitangent": 28,
    "octad": 36,
    "steiner": 63,
    "riemann_dickson": 120,
    "gopel": 135,
    "aronhold": 288,
    "syzygetic": 315,
    "azygetic": 336,
    "ennead": 960,
}
STRUCTURES = tuple(STRUCTURE_COUNT)
ENV_DATA_DIR = "QATLAS_DATA_DIR"


class LoadError(ValueError):
    pass


class UnknownStructure(KeyError):
    pass


# --- irreducible labels ------------------------------------------------------------


def parse_partition(label: str) -> list[int]:
    """``s_{3^2,1}`` -> [3, 3, 1]."""
    m = re.fullmatch(r"s_\{([0-9^,]+)\}", label)
    if not m:
        raise ValueError(f"not a partition label: {label!r}")
    parts: list[int] = []
    for tok in m.group(1).split(","):
        base, _, exp = tok.partition("^")
        parts.extend([int(base)] * int(exp or 1))
    return parts


def hook_length_degree(partition) -> int:
    lam = sorted(partition, reverse=True)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // prod


def irreducible_degree(label: str) -> int:
    m = re.fullmatch(r"phi_(\d+)[a-z]", label)
    if m:
        return int(m.group(1))
    return hook_length_degree(parse_partition(label))


@dataclass(frozen=True)
class CohomologyTable:
    name: str
    cols: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    provenance: str = ""

    @property
    def group(self) -> str:
        return GROUP_TAGS[self.name]

    def entry(self, row: int | str, col: str) -> int:
        i = ROWS.index(row) if isinstance(row, str) else row
        return self.mult[i][self.cols.index(col)]

    def column(self, col: str) -> tuple[int, ...]:
        j = self.cols.index(col)
        return tuple(r[j] for r in self.mult)

    def dimension(self, i: int) -> int:
        return sum(m * irreducible_degree(c) for m, c in zip(self.mult[i], self.cols))

    def dimensions(self) -> tuple[int, ...]:
        return tuple(self.dimension(i) for i in range(len(ROWS)))


@dataclass(frozen=True)
class StructureCharacter:
    structure: str
    constituents: tuple[str, ...]
    index: int

    @property
    def degree(self) -> int:
        return sum(irreducible_degree(c) for c in self.constituents)


@dataclass
class TableSet:
    tables: dict[str, CohomologyTable]
    characters: dict[str, StructureCharacter]
    printed_poincare: dict[str, IntPolynomial] = field(default_factory=dict)
    printed_points: dict[str, IntPolynomial] = field(default_factory=dict)
    source: str = ""

    def __getitem__(self, name: str) -> CohomologyTable:
        return self.tables[name]


# --- loading -----------------------------------------------------------------------


def default_data_dir() -> Path:
    env = os.environ.get(ENV_DATA_DIR)
    if env:
        return Path(env)
    return Path(str(resources.files("qatlas") / "data"))


def _read_json(path: Path):
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise LoadError(f"{path}: file not found") from None
    except json.JSONDecodeError as e:
        raise LoadError(f"{path}: invalid JSON ({e})") from None


def _check_table(doc, path: Path) -> CohomologyTable:
    where = str(path)
    for key, kind in (("table", str), ("rows", list), ("cols", list), ("mult", list), ("provenance", str)):
        if not isinstance(doc.get(key), kind):
            raise LoadError(f"{where}: field {key!r} missing or not a {kind.__name__}")
    name = doc["table"]
    if name not in TABLE_NAMES:
        raise LoadError(f"{where}: unknown table {name!r}")
    if tuple(doc["rows"]) != ROWS:
        raise LoadError(f"{where}: rows must be exactly {list(ROWS)}, got {doc['rows']}")
    cols = tuple(doc["cols"])
    for c in cols:
        try:
            d = irreducible_degree(c)
        except ValueError:
            raise LoadError(f"{where}: unrecognised irreducible label {c!r}") from None
        if d < 1:
            raise LoadError(f"{where}: label {c!r} has degree {d}")
    if len(set(cols)) != len(cols):
        raise LoadError(f"{where}: duplicate column labels")
    mult = doc["mult"]
    if len(mult) != len(ROWS):
        raise LoadError(f"{where}: expected {len(ROWS)} rows of multiplicities, got {len(mult)}")
    for i, row in enumerate(mult):
        if not isinstance(row, list) or len(row) != len(cols):
            raise LoadError(f"{where}: row {ROWS[i]} has the wrong number of entries")
        for j, m in enumerate(row):
            if not isinstance(m, int) or isinstance(m, bool):
                raise LoadError(f"{where}: cell ({ROWS[i]}, {cols[j]}) is not an integer: {m!r}")
            if m < 0:
                raise LoadError(f"{where}: cell ({ROWS[i]}, {cols[j]}) is negative: {m}")
    table = CohomologyTable(name, cols, tuple(tuple(r) for r in mult), doc["provenance"])
    if table.dimension(0) != H0_DIMENSION[name]:
        raise LoadError(f"{where}: row H0 has dimension {table.dimension(0)}, expected {H0_DIMENSION[name]}")
    return table


def _check_characters(doc, path: Path, labels: set[str]) -> dict[str, StructureCharacter]:
    if not isinstance(doc, list):
        raise LoadError(f"{path}: expected a list of character records")
    out = {}
    for rec in doc:
        s = rec.get("structure")
        if s not in STRUCTURE_COUNT:
            raise LoadError(f"{path}: unknown structure {s!r}")
        cons = tuple(rec.get("constituents", ()))
        bad = [c for c in cons if c not in labels]
        if bad:
            raise LoadError(f"{path}: {s}: constituents {bad} are not Sp6 table columns")
        if len(set(cons)) != len(cons):
            raise LoadError(f"{path}: {s}: character is not multiplicity-free")
        ch = StructureCharacter(s, cons, rec.get("index"))
        if ch.index != STRUCTURE_COUNT[s]:
            raise LoadError(f"{path}: {s}: index {ch.index} differs from the structure count {STRUCTURE_COUNT[s]}")
        if ch.degree != ch.index:
            raise LoadError(f"{path}: {s}: constituent degrees sum to {ch.degree}, not {ch.index}")
        out[s] = ch
    return out


def load_tables(data_dir: str | os.PathLike | None = None) -> TableSet:
    root = Path(data_dir) if data_dir is not None else default_data_dir()
    tables = {}
    for name in TABLE_NAMES:
        path = root / f"{name}.json"
        tables[name] = _check_table(_read_json(path), path)
        if tables[name].name != name:
            raise LoadError(f"{path}: declares table {tables[name].name!r}")
    if set(tables["Sp6_level2"].cols) != set(tables["Sp6_btg_level2"].cols):
        raise LoadError(f"{root}: the two Sp6 tables have different column sets")
    path = root / "characters.json"
    chars = _check_characters(_read_json(path), path, set(tables["Sp6_level2"].cols))
    ts = TableSet(tables, chars, source=str(root))
    path = root / "printed.json"
    if path.exists():
        doc = _read_json(path)
        ts.printed_poincare = {k: IntPolynomial(tuple(v), "t") for k, v in doc.get("poincare", {}).items()}
        ts.printed_points = {k: IntPolynomial(tuple(v), "q") for k, v in doc.get("points", {}).items()}
    return ts


# --- read-offs ------------------------------------------------------------------------


def _character(ts: TableSet, structure: str) -> StructureCharacter:
    try:
        return ts.characters[structure]
    except KeyError:
        raise UnknownStructure(structure) from None


def poincare_from_character(table: CohomologyTable, constituents) -> IntPolynomial:
    return IntPolynomial(
        tuple(sum(table.entry(i, c) for c in constituents) for i in range(len(ROWS))), "t"
    )


def poincare(ts: TableSet, structure: str) -> IntPolynomial:
    return poincare_from_character(ts["Sp6_level2"], _character(ts, structure).constituents)


def poincare_by_invariants(table: CohomologyTable, trivial: str) -> IntPolynomial:
    return IntPolynomial(table.column(trivial), "t")


def point_count_from_poincare(p: IntPolynomial, top: int = 6) -> IntPolynomial:
    coeffs = [0] * (top + 1)
    for i in range(top + 1):
        coeffs[top - i] = (-1) ** i * p.coeff(i)
    return IntPolynomial(tuple(coeffs), "q")


def point_count(ts: TableSet, structure: str) -> IntPolynomial:
    return point_count_from_poincare(poincare(ts, structure))


@dataclass(frozen=True)
class RouteComparison:
    structure: str
    route: str
    character_route: IntPolynomial
    alternate_route: IntPolynomial

    @property
    def agree(self) -> bool:
        return self.character_route == self.alternate_route


def poincare_alt_routes(ts: TableSet) -> list[RouteComparison]:
    return [
        RouteComparison(
            "bitangent",
            "Sp6_btg_level2 column phi_1a",
            poincare(ts, "bitangent"),
            poincare_by_invariants(ts["Sp6_btg_level2"], "phi_1a"),
        ),
        RouteComparison(
            "aronhold",
            "S7_level2 column s_{7}",
            poincare(ts, "aronhold"),
            poincare_by_invariants(ts["S7_level2"], "s_{7}"),
        ),
    ]


# --- audit -----------------------------------------------------------------------------

# documented discrepancies in the printed source data
KNOWN_FINDINGS = frozenset(
    {
        "poincare:ennead",
        "points:ennead",
        "dimension:H4",
        "octonion:cell(e7,e1)",
    }
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    expected: str = ""
    observed: str = ""
    finding: str = ""  # ";"-separated finding ids explaining a failure

    @property
    def known(self) -> bool:
        ids = [f for f in self.finding.split(";") if f]
        return bool(ids) and all(f in KNOWN_FINDINGS for f in ids)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "pass": self.passed,
            "expected": self.expected,
            "observed": self.observed,
        }


@dataclass(frozen=True)
class Finding:
    id: str
    message: str

    @property
    def known(self) -> bool:
        return self.id in KNOWN_FINDINGS

    def as_dict(self) -> dict:
        return {"id": self.id, "known": self.known, "message": self.message}


@dataclass
class AuditReport:
    checks: list[Check]
    findings: list[Finding]

    @property
    def clean(self) -> bool:
        return not self.findings

    def unknown_findings(self) -> list[Finding]:
        return [f for f in self.findings if not f.known]


def dimension_pairs(ts: TableSet) -> list[tuple[int, int, int]]:
    a, b = ts["Sp6_level2"], ts["S7_level2"]
    return [(i, a.dimension(i), b.dimension(i)) for i in range(len(ROWS))]


def audit(ts: TableSet, ranks: dict[str, int] | None = None, octonions: bool = True) -> AuditReport:
    """Cross-check every ingested table; mismatches become findings.

    ``ranks`` maps structure names to pair-orbit counts (from ``sp6``); pass
    ``None`` to skip that section.
    """
    checks: list[Check] = []
    findings: list[Finding] = []

    def record(name: str, ok: bool, expected, observed, fid: str, msg: str) -> None:
        checks.append(Check("audit", name, ok, str(expected), str(observed), "" if ok else fid))
        if not ok:
            findings.append(Finding(fid, msg))

    for s in STRUCTURES:
        ch = ts.characters[s]
        record(f"degree-sum {s}", ch.degree == STRUCTURE_COUNT[s], STRUCTURE_COUNT[s], ch.degree,
               f"degree:{s}", f"{s}: constituent degrees sum to {ch.degree}, structure count is {STRUCTURE_COUNT[s]}")

    for i, d_sp6, d_s7 in dimension_pairs(ts):
        record(f"dim H^{i} Sp6 vs S7", d_sp6 == d_s7, d_sp6, d_s7,
               f"dimension:H{i}", f"dim H^{i}(Q[2]) is {d_sp6} from the Sp6 table but {d_s7} from the S7 table")

    for rc in poincare_alt_routes(ts):
        record(f"route {rc.structure} via {rc.route}", rc.agree, rc.character_route.ascending_str(),
               rc.alternate_route.ascending_str(), f"route:{rc.structure}",
               f"{rc.structure}: character route {rc.character_route.ascending_str()} vs {rc.route} "
               f"{rc.alternate_route.ascending_str()}")

    if ranks is not None:
        for s, r in ranks.items():
            n = len(ts.characters[s].constituents)
            record(f"pair-rank {s}", r == n, n, r, f"rank:{s}",
                   f"{s}: {r} orbits on pairs but {n} constituents")

    for s in STRUCTURES:
        comp = poincare(ts, s)
        printed = ts.printed_poincare.get(s)
        if printed is not None:
            record(f"poincare {s}", comp == printed, printed.ascending_str(), comp.ascending_str(),
                   f"poincare:{s}", f"{s}: table arithmetic gives {comp.ascending_str()}, printed {printed.ascending_str()}")
        pts = point_count(ts, s)
        printed = ts.printed_points.get(s)
        if printed is not None:
            record(f"points {s}", pts == printed, printed, pts,
                   f"points:{s}", f"{s}: purity gives {pts}, printed {printed}")

    if octonions:
        from .octonions import table_mismatches

        for x, y, got, want in table_mismatches():
            record(f"octonion cell (e{x}, e{y})", False, want, got, f"octonion:cell(e{x},e{y})",
                   f"octonion table cell (e{x}, e{y}): printed {want}, but the sign rule and "
                   f"anticommutativity require {got}")
    return AuditReport(checks, findings)
