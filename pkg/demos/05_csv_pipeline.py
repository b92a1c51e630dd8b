#!/usr/bin/env python3
"""End-to-end CSV pipeline: a JSON config binds encoders to columns, the
CLI streams rows to one SDR line each.

Everything here also works from a shell:

    sdrkit encode --config pipeline.json --input readings.csv
    sdrkit evaluate --config eval.json --input samples.csv
    sdrkit selftest-hash
"""

import json
import tempfile
from pathlib import Path

from sdrkit import cli

workdir = Path(tempfile.mkdtemp(prefix="sdrkit-demo-"))

pipeline = {
    "encoder": {
        "type": "multi",
        "parts": [
            {"field": "temp",
             "encoder": {"type": "scalar", "min": -10, "max": 40, "n": 134, "w": 21}},
            {"field": "ts",
             "encoder": {"type": "datetime", "weekend": {"w": 21},
                         "time_of_day": {"n": 100, "w": 21}}},
            {"field": ["x", "y"], "speed_field": "speed",
             "encoder": {"type": "geospatial", "n": 512, "variant": "topw",
                         "w": 21, "radius": 2, "radius_min": 2, "radius_max": 8,
                         "speed_scale": 0.2, "seed": 11}},
        ],
    },
    "output_format": "sparse",
}

readings = """temp,ts,x,y,speed,comment
21.5,2023-01-07T09:15:00,10,20,0,parked
22.0,2023-01-07T09:20:00,11,20,1.5,rolling
22.5,2023-01-07T09:25:00,18,20,12,on the highway
-3.0,2023-01-09T23:50:00,18,20,0,cold monday night
"""

config_path = workdir / "pipeline.json"
config_path.write_text(json.dumps(pipeline, indent=2))
input_path = workdir / "readings.csv"
input_path.write_text(readings)
output_path = workdir / "encoded.txt"

print(f"config:  {config_path}")
print(f"input:   {input_path}")
rc = cli.main(["encode", "--config", str(config_path),
               "--input", str(input_path), "--output", str(output_path)])
print(f"exit code: {rc}")

print()
print("one line per row, bit indices within a 134+142+512 = 788-bit code:")
for line in output_path.read_text().splitlines():
    indices = line.split(",")
    print(f"  {len(indices):>2} one-bits: {line[:60]}...")

print()
print("--- evaluation run: scalar encoder vs |a - b| on a value grid ---")
eval_config = workdir / "eval.json"
eval_config.write_text(json.dumps({
    "encoder": {"type": "scalar", "min": 0, "max": 45, "n": 221, "w": 21},
    "field": "v",
    "distance": "absolute",
}))
samples = workdir / "samples.csv"
samples.write_text("v\n" + "\n".join(str((i + 0.5) * 0.225) for i in range(200)) + "\n")
rc = cli.main(["evaluate", "--config", str(eval_config),
               "--input", str(samples), "--quadruples", "5000"])
print(f"exit code: {rc} (0 means the distance passed all three axioms)")
