from .main import run_command
from .reports import OutputFormat, emit_report
from .tables import TABLES, TableReport, TableRow, run_table
