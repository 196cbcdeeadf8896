"""Drive the command-line interface over the shipped corpus documents.

Run:  python3 demos/cli_tour.py
"""

import os

from weakgalois.cli import main

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")


def show(args):
    print("$ weakgalois " + " ".join(args))
    code = main(args)
    print("(exit %d)\n" % code)


show(["verify", os.path.join(CORPUS, "p2_kG_weakhopf.json"),
      "--format", "pretty"])
show(["galois", os.path.join(CORPUS, "dualnumbers_z2_graded.json"),
      "--format", "pretty"])
show(["frobenius", os.path.join(CORPUS, "p2_transport_action.json"),
      "--format", "pretty"])
show(["morita", os.path.join(CORPUS, "p2_kG_weakhopf.json"),
      "--subring", "scalars", "--format", "pretty"])
show(["strongly-graded", os.path.join(CORPUS, "m2_p2_graded.json"),
      "--samples", "column", "--format", "pretty"])
