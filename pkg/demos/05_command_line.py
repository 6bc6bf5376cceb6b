"""The same pipeline through the ``lcskit`` command.

Each report is a list of ``key = value`` lines under ``[section]`` headers;
the exit status says whether the requested checks passed.  Equivalent shell
usage is ``lcskit verify data/braid_section.pres``.
"""

import tempfile
from contextlib import redirect_stdout
from io import StringIO
from pathlib import Path

from lcskit.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def show(*argv):
    buf = StringIO()
    with redirect_stdout(buf):
        code = main([str(a) for a in argv])
    print(f"$ lcskit {' '.join(str(a) for a in argv)}    (exit {code})")
    print(buf.getvalue())


show("verify", DATA / "braid_section.pres")
show("ranks", DATA / "pencil4.pres", "--max-k", "4")
with tempfile.TemporaryDirectory() as tmp:
    arr = Path(tmp) / "x3.arr"
    show("realize", DATA / "x3.pres", "-o", arr)
    show("lattice", arr)
