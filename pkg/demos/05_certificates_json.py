"""Serialize a verdict as a JSON certificate and replay it.

Certificates are self-contained: the document embeds the input, so any
reader can re-run the pipeline and compare.  Large integers travel as
decimal strings to survive JSON readers that silently round.
"""

import json

from heavenly import (
    classify,
    dump_document,
    input_from_document,
    output_document,
    replayed_verdict,
)

DOC = {"kind": "jacobian", "base_field": "Q", "poly": [0, -1, 0, 0, 0, 1]}


def main():
    verdict = classify(input_from_document(DOC))
    certificate = output_document(DOC, verdict, 0.0)
    text = dump_document(certificate)
    print(text)
    print()

    # A fresh run from nothing but the document text must agree.
    parsed = json.loads(text)
    replay = replayed_verdict(parsed)
    same = (replay.status == parsed["verdict"]["status"]
            and len(replay.steps) == len(parsed["certificate"]))
    print(f"replay agrees with the certificate: {same}")


if __name__ == "__main__":
    main()
