"""Rebuild the four reference examples and compare them with the frozen goldens."""
from apncodes import verify_examples

for rep, problems in verify_examples():
    print(rep.to_text())
    print("  problems:", problems or "none")
    print()
