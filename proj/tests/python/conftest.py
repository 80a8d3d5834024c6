import pathlib
import sys

# source tree package; the compiled _core lands on PYTHONPATH via ctest
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[2] / "python"))
