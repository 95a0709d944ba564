"""Collects one result line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def report(criterion: str, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}"
    LINES.append(line)
    print(line)
