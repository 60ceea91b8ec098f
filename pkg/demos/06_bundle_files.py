"""Bundle files: exact structure constants on disk.

Bundles are JSON documents validated against the schema shipped with the
package; coefficients are integers or "p/q" strings, tensors are sparse
coordinate lists.  Everything a construct writes re-checks clean.
"""

import json
import tempfile
from pathlib import Path

from hopffact import bundle as bundle_io
from hopffact import named_example
from hopffact.cli import main

tmp = Path(tempfile.mkdtemp())

# Serialize the double of C3 and look at the document structure.
b = named_example("double:C3")
text = bundle_io.dumps(b)
doc = json.loads(text)
print("bundle keys:", sorted(doc))
print("hopf dim:", doc["hopf"]["dim"], "| mult entries:", len(doc["hopf"]["mult"]),
      "| R entries:", len(doc["rmatrix"]))

# Round trip through the file system and the CLI.
path = tmp / "d_c3.json"
path.write_text(text)
code = main(["check", str(path), "--all"])
print("cli check exit code:", code)

# The loader rejects malformed documents with a precise message.
doc["hopf"]["mult"].append([0, 0, 999, 1])
bad = tmp / "bad.json"
bad.write_text(json.dumps(doc))
print("broken file exit code:", main(["check", str(bad)]))
