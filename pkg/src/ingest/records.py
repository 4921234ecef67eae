import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from arithmetic import ArithmeticDomainError, Factorization, MplabError, factorize, is_prime, sigma


logger = logging.getLogger(__name__)

K_FIELD = re.compile(r"k=(\d+)")
M_FIELD = re.compile(r";\s*m=")
FACTOR = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*")
STAR = re.compile(r"\*")
SOURCE_FIELD = re.compile(r";\s*src=(.*)$")


class RecordParseError(MplabError, ValueError):
    """Syntax error at a 1-based column of a record line"""

    def __init__(self, message: str, column: int, line: str = "", line_number: Optional[int] = None):
        self.column = column
        self.line = line
        self.line_number = line_number
        where = f"line {line_number}, " if line_number is not None else ""
        super().__init__(f"{where}column {column}: {message}")


class RecordValidationError(MplabError, ValueError):
    """sigma(m) != k*m, with both sides kept for the report"""

    def __init__(self, sigma_m: int, k_times_m: int, line_number: Optional[int] = None):
        self.sigma_m = sigma_m
        self.k_times_m = k_times_m
        self.line_number = line_number
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}sigma(m) = {sigma_m} but k*m = {k_times_m}")


class DatabaseError(MplabError):
    """Every bad line of a database file, reported together"""

    def __init__(self, path, failures: List[Exception]):
        self.path = path
        self.failures = failures
        lines = "\n".join(f"  {failure}" for failure in failures)
        super().__init__(f"{len(failures)} invalid record(s) in {path}:\n{lines}")


@dataclass(frozen=True)
class MultiperfectRecord:
    """A validated claim sigma(m) = k*m with its provenance"""

    m: Factorization
    k: int
    source: str = ""
    line_number: Optional[int] = field(default=None, compare=False)

    @property
    def value(self) -> int:
        return self.m.value

    def format(self) -> str:
        text = f"k={self.k}; m={self.m.format()}"
        return f"{text}; src={self.source}" if self.source else text


def parse_record(line: str, line_number: Optional[int] = None) -> MultiperfectRecord:
    """
    Parse and validate one line of the form 'k=3; m=2^3 * 3 * 5; src=classical'.

    Raises RecordParseError for syntax problems and composite prime tokens,
    RecordValidationError when sigma(m) != k*m.
    """
    text = line.rstrip("\n")

    def fail(message, pos):
        raise RecordParseError(message, pos + 1, text, line_number)

    match = K_FIELD.match(text, 0)
    if not match:
        fail("expected 'k=<integer>'", 0)
    k = int(match.group(1))
    pos = match.end()

    match = M_FIELD.match(text, pos)
    if not match:
        fail("expected '; m='", pos)
    pos = match.end()

    pairs: List[Tuple[int, int]] = []
    while True:
        match = FACTOR.match(text, pos)
        if not match:
            fail("expected a factor '<prime>' or '<prime>^<exponent>'", pos)
        prime, exponent = int(match.group(1)), int(match.group(2) or 1)
        if not is_prime(prime):
            fail(f"{prime} is not prime", match.start(1))
        if exponent < 1:
            fail(f"exponent of {prime} must be positive", match.start(2))
        pairs.append((prime, exponent))
        pos = match.end()
        star = STAR.match(text, pos)
        if not star:
            break
        pos = star.end()

    source = ""
    if pos < len(text):
        match = SOURCE_FIELD.match(text, pos)
        if not match:
            fail("expected '; src=<text>' or end of line", pos)
        source = match.group(1).strip()

    if k < 2:
        fail(f"abundancy k must be at least 2, got {k}", 2)

    m = Factorization.from_pairs(pairs, verify=False)
    sigma_m, k_times_m = sigma(m), k * m.value
    if sigma_m != k_times_m:
        raise RecordValidationError(sigma_m, k_times_m, line_number)

    return MultiperfectRecord(m=m, k=k, source=source, line_number=line_number)


def _record_lines(text: str) -> Iterable[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            yield number, stripped


def load_database(path: Union[str, Path]) -> List[MultiperfectRecord]:
    """
    Load and validate every record in a database file.

    Duplicates (same m) are collapsed with a warning; any invalid line
    aborts the load with a DatabaseError naming all of them.
    """
    path = Path(path)
    records: List[MultiperfectRecord] = []
    failures: List[Exception] = []
    seen = {}

    for number, line in _record_lines(path.read_text()):
        try:
            record = parse_record(line, line_number=number)
        except (RecordParseError, RecordValidationError, ArithmeticDomainError) as exc:
            if not getattr(exc, 'line_number', None):
                exc = RecordParseError(str(exc), 1, line, number)
            failures.append(exc)
            continue
        if record.value in seen:
            logger.warning("%s: duplicate m=%d on line %d collapsed into line %d",
                           path, record.value, number, seen[record.value])
            continue
        seen[record.value] = number
        records.append(record)

    if failures:
        raise DatabaseError(path, failures)

    logger.info("Loaded %d records from %s", len(records), path)
    return records


def persist_hits(hits, path: Union[str, Path], source: str = "search") -> int:
    """
    Append search hits to a database file in the record grammar.

    Hits whose m is already present are skipped. Returns the number of
    lines written.
    """
    hits = list(hits)
    if not hits:
        return 0
    path = Path(path)
    existing = {record.value for record in load_database(path)} if path.exists() else set()

    lines = []
    for hit in hits:
        if hit.m in existing:
            logger.info("m=%d already in %s, skipped", hit.m, path)
            continue
        record = MultiperfectRecord(m=factorize(hit.m), k=hit.k, source=source)
        lines.append(record.format())
        existing.add(hit.m)

    if lines:
        if path.exists() and path.stat().st_size and not path.read_text().endswith("\n"):
            lines[0] = "\n" + lines[0]
        with open(path, 'a') as f:
            for line in lines:
                f.write(line + "\n")
    logger.info("Appended %d records to %s", len(lines), path)
    return len(lines)
