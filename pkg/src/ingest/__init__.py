from .records import (
    DatabaseError,
    MultiperfectRecord,
    RecordParseError,
    RecordValidationError,
    load_database,
    parse_record,
    persist_hits,
)

__all__ = [
    'DatabaseError', 'MultiperfectRecord', 'RecordParseError', 'RecordValidationError',
    'load_database', 'parse_record', 'persist_hits',
]
