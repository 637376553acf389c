# Copyright 2026 The Codia Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates COML output against schema/coml.xsd with an independent validator.

usage: check_schema.py <source-dir> <samples-binary> <work-dir>
"""

import pathlib
import subprocess
import sys

import xmlschema

INVALID = {
    "bad version": '<document version="2"><contract name="a"><crossref target="b"/></contract></document>',
    "space in label": '<document version="1"><contract name="a b"><crossref target="b"/></contract></document>',
    "one-part refinement": (
        '<document version="1"><contract name="a"><refinement op="and">'
        '<contract name="b"><crossref target="a"/></contract></refinement></contract></document>'
    ),
    "unknown operator": (
        '<document version="1"><contract name="a"><guard><cmp var="x" op="lt" value="1"/></guard>'
        '<crossref target="b"/></contract></document>'
    ),
    "clock without prefix": (
        '<document version="1"><contract name="a"><timing><cmp clock="x" op="less" value="1"/>'
        '</timing><crossref target="b"/></contract></document>'
    ),
    "two bodies": (
        '<document version="1"><contract name="a"><crossref target="b"/><crossref target="c"/>'
        '</contract></document>'
    ),
}


def main() -> int:
    source, samples_binary, work = map(pathlib.Path, sys.argv[1:4])
    schema = xmlschema.XMLSchema(source / "schema" / "coml.xsd")
    samples = work / "coml-samples"
    subprocess.run([str(samples_binary), str(samples), "300"], check=True)

    failures = 0
    documents = [source / "data" / "coffee.xml", *sorted(samples.glob("*.xml"))]
    for path in documents:
        errors = list(schema.iter_errors(str(path)))
        if errors:
            failures += 1
            print(f"FAIL {path}: {errors[0].reason}")
    for name, text in INVALID.items():
        if schema.is_valid(text):
            failures += 1
            print(f"FAIL schema accepted: {name}")
    print(f"{len(documents)} documents valid, {len(INVALID)} invalid ones rejected"
          if failures == 0 else f"{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
