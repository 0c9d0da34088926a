"""Worked CLI invocations pinned by golden files; run this file to rewrite them."""

from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "predict_p5_e1_red2_0": "predict --p 5 --e 1 --inertia red:2,0",
    "derive_p5_e1_red2_0": "derive --p 5 --e 1 --inertia red:2,0",
    "derive_p5_e1_red2_0_ordinary": "derive --p 5 --e 1 --inertia red:2,0 --ordinary-lift",
    "lifts_p5_e1_red2_0_w0_1": "lifts --p 5 --e 1 --inertia red:2,0 --weight 0,1",
    "predict_p3_e1_irr2": "predict --p 3 --e 1 --inertia irr:2",
    "derive_p3_e1_irr2": "derive --p 3 --e 1 --inertia irr:2",
    "reduce_mj_p3_e2_j1": "breuil reduce-mj --p 3 --e 2 --j 1",
    "rank_one_p5_e1_k21_r12": "breuil rank-one --p 5 --e 1 --kappa 21 --r 12",
    "verify_p3_e2": "verify --p-max 3 --e-max 2",
}


if __name__ == "__main__":
    import contextlib
    import io

    from serre_weights.cli import main

    GOLDEN.mkdir(exist_ok=True)
    for name, cmd in CASES.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(cmd.split()) == 0, cmd
        (GOLDEN / f"{name}.json").write_text(buf.getvalue())
