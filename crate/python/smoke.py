"""Smoke test for the g2lf_py extension module.

Usage: python3 python/smoke.py [path/to/libg2lf_py.so]

Without an argument the extension is built with cargo and loaded from the
target directory.
"""

import importlib.util
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load(lib_path=None):
    if lib_path is None:
        subprocess.run(
            ["cargo", "build", "--release", "-p", "g2lf-py", "--features", "extension-module"],
            cwd=ROOT,
            check=True,
        )
        lib_path = ROOT / "target" / "release" / "libg2lf_py.so"
    tmp = pathlib.Path(tempfile.mkdtemp()) / "g2lf_py.so"
    shutil.copy(lib_path, tmp)
    found = importlib.util.spec_from_file_location("g2lf_py", tmp)
    module = importlib.util.module_from_spec(found)
    found.loader.exec_module(module)
    return module


def main():
    g = load(sys.argv[1] if len(sys.argv) > 1 else None)

    assert g.is_identity([]) == "Identity"
    assert g.is_identity([(1, 1)]) == "NotIdentity"
    assert g.is_identity([(1, 1), (2, 1), (3, 1), (4, 1), (5, 2), (4, 1), (3, 1), (2, 1), (1, 1)]) == "HyperellipticInvolution"
    assert g.is_identity([(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)] * 6) == "Identity"
    h = g.homology_action([(1, 1)])
    assert h == [[1, -1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]

    seed = g.bundled_seed()
    assert len(seed) == 7 and seed.fibration_type() == (4, 3)
    assert seed.verify() == "Identity"
    assert seed.hurwitz(2).verify() == "Identity"
    assert seed.cyclic_permute(3).conjugate([(2, 1), (4, -1)]).verify() == "Identity"
    a, b = seed.square_swap()
    assert a.fibration_type() == (8, 6) and b.verify() == "Identity"
    assert seed.fiber_sum(seed, [(1, 1)]).fibration_type() == (8, 6)
    again = g.Factorization.from_json(seed.to_json())
    assert again.digest() == seed.digest()

    pf = g.derive_14_13()
    assert len(pf) == 27 and pf.fibration_type() == (14, 13)
    assert pf.verify() == "Identity"
    assert json.loads(pf.certificate_json())["verdict"] == "Identity"

    assert g.signature(14, 13) == -11 and g.euler(14, 13) == 23
    assert g.admissible(4, 3) and not g.admissible(10, 0)
    assert g.certify_minimal(6, 7)[0] == "Proved"
    assert g.certify_indecomposable(14, 13)[0] == "Unknown"
    assert len(g.decompositions(14, 13)) == 3
    assert json.loads(g.theorem1_report_json())["verdict"] == "Proved"
    assert (12, 19) in g.enumerate_admissible(5)
    try:
        g.signature(10, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("non-integral signature accepted")

    print("smoke ok:", pf)


if __name__ == "__main__":
    main()
