"""Shared test helpers."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def assert_report_json(obj: dict) -> None:
    """Check a serialized report against the wire schema."""
    assert isinstance(obj["id"], str)
    assert isinstance(obj["params"], dict)
    assert isinstance(obj["lhs"], str) and _decimal(obj["lhs"])
    assert isinstance(obj["rhs"], str) and _decimal(obj["rhs"])
    assert isinstance(obj["pass"], bool)
    assert isinstance(obj["regime"], str)
    assert isinstance(obj["terms"], list)
    for term in obj["terms"]:
        assert term["side"] in ("L", "R")
        assert term["sign"] in (1, -1)
        assert isinstance(term["shape"], list)
        assert all(isinstance(v, int) for v in term["shape"])
        assert isinstance(term["value"], str) and _decimal(term["value"])


def _decimal(text: str) -> bool:
    return text.lstrip("-").isdigit()


def read_golden(name: str) -> str:
    with open(os.path.join(GOLDEN_DIR, name)) as fh:
        return fh.read()
