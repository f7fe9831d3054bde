"""The same workflow through the command-line front end."""

import json
import tempfile
from pathlib import Path

from orthoglide.cli import main

with tempfile.TemporaryDirectory() as tmp:
    design = Path(tmp) / "design.json"
    main(["synth", "--workspace", "200", "--psi-max", "2", "--out", str(design)])
    doc = json.loads(design.read_text())
    print(f"leg length {doc['leg_length_mm']:.3f} mm, stroke ratio {doc['stroke_ratio']:.3f}")

    # Point analysis at the Q1 corner, text form.
    q1 = doc["q1_mm"]
    main(["analyze", str(design), "--point", f"{q1},{q1},{q1}", "--format", "text"])

    # Field map and verification.
    csv = Path(tmp) / "z_q1.csv"
    main(["map", str(design), "--plane", "z=q1", "--grid", "50", "--out", str(csv)])
    print(f"map rows: {len(csv.read_text().splitlines()) - 1}")
    code = main(["verify", str(design), "--grid", "21"])
    print(f"verify exit code {code}")

    # A design with legs 10% too short fails verification.
    doc["leg_length_mm"] *= 0.9
    bad = Path(tmp) / "bad.json"
    bad.write_text(json.dumps(doc))
    print(f"tampered design exit code {main(['verify', str(bad), '--grid', '21'])}")
