import runpy
from pathlib import Path

import pytest

DEMO_DIR = Path(__file__).resolve().parent.parent / "demos"
DEMOS = sorted(DEMO_DIR.glob("*.py"))


def test_demo_list_complete():
    assert [p.name for p in DEMOS] == [
        "01_worked_instance.py",
        "02_engine_tour.py",
        "03_sparsity_and_speed.py",
        "04_dominance_playground.py",
    ]


@pytest.mark.parametrize("path", DEMOS, ids=lambda p: p.stem)
def test_demo_runs_clean(path, monkeypatch, capsys):
    monkeypatch.setenv("LCBS_DEMO_FAST", "1")
    # demos assert their own claims as they go; run them to completion
    runpy.run_path(str(path), run_name="__main__")
    assert capsys.readouterr().out.strip()
