"""Generate the corpus input documents and record their expected reports.

Run from the repository root:  python3 tools/gen_corpus.py
"""

import io
import json
import os
import sys

from weakgalois.cli import main as cli_main

ROOT = os.path.join(os.path.dirname(__file__), "..")
CORPUS = os.path.join(ROOT, "corpus")


def matrix_units_algebra(n):
    """M_n(k) on the matrix units E_ab, basis index n*a + b."""
    dim = n * n
    table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b == c:
                        table[n * a + b][n * c + d][n * a + d] = 1
    unit = [0] * dim
    for a in range(n):
        unit[n * a + a] = 1
    return {"dim": dim, "table": table, "unit": unit}


def matrix_units_graded(n):
    """M_n(k) graded by the pair groupoid: E_ab sits in degree (a,b)."""
    dim = n * n
    components = []
    for m in range(dim):           # morphism index of (a,b) is n*a + b
        v = [0] * dim
        v[m] = 1
        components.append([v])
    return {
        "field": "rationals",
        "groupoid": {"builder": "pair", "n": n},
        "subject": {"kind": "graded",
                    "algebra": matrix_units_algebra(n),
                    "components": components},
    }


def m2_column_sample():
    """k^2 as a graded right M_2(k)-module: e_a in degree (0,a)."""
    act = []
    for a in range(2):
        for b in range(2):
            m = [[0, 0], [0, 0]]
            m[b][a] = 1               # e_a . E_ab = e_b
            act.append(m)
    components = []
    for mor in range(4):              # morphism (i,j) has index 2*i + j
        if mor < 2:                   # (0, a)
            v = [0, 0]
            v[mor] = 1
            components.append([v])
        else:
            components.append([])
    return {"dim": 2, "action": act, "components": components}


def transport_action(n):
    """The pair groupoid moving coordinates of k^n: (i,j) sends e_j to e_i."""
    dim = n
    table = [[[1 if i == j and k == i else 0 for k in range(dim)]
              for j in range(dim)] for i in range(dim)]
    matrices = []
    for i in range(n):
        for j in range(n):
            m = [[0] * n for _ in range(n)]
            m[i][j] = 1
            matrices.append(m)
    scalars = [[1] * n]
    return {
        "field": "rationals",
        "groupoid": {"builder": "pair", "n": n},
        "subject": {"kind": "action",
                    "algebra": {"dim": n, "table": table, "unit": [1] * n},
                    "matrices": matrices},
        "subrings": {"scalars": scalars},
    }


DOCS = {
    "p2_kG_weakhopf.json": {
        "field": "rationals",
        "groupoid": {"builder": "pair", "n": 2},
        "subject": {"kind": "weakhopf", "construction": "groupoid-algebra"},
        "subrings": {"scalars": [[1, 0, 0, 1]]},
    },
    "c3_kG_weakhopf_f5.json": {
        "field": {"prime": 5},
        "groupoid": {"builder": "group",
                     "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]},
        "subject": {"kind": "weakhopf", "construction": "groupoid-algebra"},
    },
    "c2_Gk_weakhopf.json": {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
        "subject": {"kind": "weakhopf",
                    "construction": "dual-groupoid-algebra"},
    },
    "union_c2_p2_weakhopf.json": {
        "field": "rationals",
        "groupoid": {"builder": "union",
                     "parts": [{"builder": "group", "table": [[0, 1], [1, 0]]},
                               {"builder": "pair", "n": 2}]},
        "subject": {"kind": "weakhopf", "construction": "groupoid-algebra"},
    },
    "c2_swap_action.json": {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
        "subject": {
            "kind": "action",
            "algebra": {"dim": 2,
                        "table": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
                        "unit": [1, 1]},
            "matrices": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        },
        "subrings": {"scalars": [[1, 1]]},
    },
    "p2_transport_action.json": transport_action(2),
    "dualnumbers_z2_graded.json": {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
        "subject": {
            "kind": "graded",
            "algebra": {"dim": 2,
                        "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
                        "unit": [1, 0]},
            "components": [[[1, 0]], [[0, 1]]],
        },
    },
    "m2_p2_graded.json": dict(matrix_units_graded(2),
                              samples={"column": [m2_column_sample()]}),
    "m3_p3_graded.json": matrix_units_graded(3),
    "kc2_self_comodule.json": {
        "field": "rationals",
        "groupoid": {"builder": "group", "table": [[0, 1], [1, 0]]},
        "subject": {
            "kind": "comodule",
            "algebra": {"dim": 2,
                        "table": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                        "unit": [1, 0]},
            "hopf": {"construction": "groupoid-algebra"},
            "rho": [[1, 0], [0, 0], [0, 0], [0, 1]],
        },
    },
}

CASES = [
    ("p2_kG_weakhopf_all", "p2_kG_weakhopf.json", "all", [], 0),
    ("c3_kG_weakhopf_f5_all", "c3_kG_weakhopf_f5.json", "all", [], 0),
    ("c2_Gk_weakhopf_verify", "c2_Gk_weakhopf.json", "verify", [], 0),
    ("union_c2_p2_weakhopf_verify", "union_c2_p2_weakhopf.json", "verify",
     [], 0),
    ("c2_swap_action_all", "c2_swap_action.json", "all", [], 0),
    ("c2_swap_action_scalar_subring_morita", "c2_swap_action.json", "morita",
     ["--subring", "scalars"], 0),
    ("p2_kG_scalar_subring_morita", "p2_kG_weakhopf.json", "morita",
     ["--subring", "scalars"], 1),
    ("p2_transport_action_all", "p2_transport_action.json", "all", [], 0),
    ("p2_transport_frobenius", "p2_transport_action.json", "frobenius",
     [], 0),
    ("dualnumbers_z2_graded_all", "dualnumbers_z2_graded.json", "all", [], 1),
    ("dualnumbers_z2_galois", "dualnumbers_z2_graded.json", "galois", [], 1),
    ("m2_p2_graded_all", "m2_p2_graded.json", "all", [], 0),
    ("m2_p2_graded_sampled", "m2_p2_graded.json", "strongly-graded",
     ["--samples", "column"], 0),
    ("m3_p3_graded_strongly", "m3_p3_graded.json", "strongly-graded", [], 0),
    ("kc2_self_comodule_all", "kc2_self_comodule.json", "all", [], 0),
]


def run():
    os.makedirs(CORPUS, exist_ok=True)
    for name, doc in DOCS.items():
        with open(os.path.join(CORPUS, name), "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    manifest = []
    for name, input_name, command, args, want_exit in CASES:
        buf = io.StringIO()
        code = cli_main([command, os.path.join(CORPUS, input_name)] + args,
                        out=buf)
        if code != want_exit:
            raise SystemExit("case %s: exit %d, expected %d"
                             % (name, code, want_exit))
        expected = name + ".expected.json"
        with open(os.path.join(CORPUS, expected), "w") as fh:
            fh.write(buf.getvalue())
        manifest.append({"name": name, "input": input_name,
                         "command": command, "args": args,
                         "expected": expected, "exit_code": want_exit})
    with open(os.path.join(CORPUS, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    print("wrote %d documents, %d cases" % (len(DOCS), len(CASES)))


if __name__ == "__main__":
    sys.exit(run())
