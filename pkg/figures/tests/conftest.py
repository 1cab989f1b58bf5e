import csv

import pytest


def write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


@pytest.fixture
def suite_tree(tmp_path):
    """A minimal suite output tree with every artifact the figures read."""
    root = tmp_path / "runs"
    hist_rows = []
    for base in ("aldi", "cbs", "svgd"):
        for variant in (f"ma-{base}-ew", base):
            for b in range(4):
                lo, hi = -2.0 + b, -1.0 + b
                hist_rows.append((variant, lo, hi, 0.25, 0.2 + 0.025 * b))
    write_csv(
        root / "exp1-bimodal" / "histogram.csv",
        ("variant", "bin_lo", "bin_hi", "sample_fraction",
         "reference_fraction"),
        hist_rows,
    )
    write_csv(
        root / "exp2-gauss4d" / "convergence.csv",
        ("method", "iteration", "mean_running_estimate"),
        [(m, t, 0.5 + 0.1 / (t + 1)) for m in ("ma-aldi-ew", "pmala")
         for t in range(5)],
    )
    write_csv(
        root / "exp2-gauss4d" / "autocorr.csv",
        ("method", "lag", "autocorr"),
        [(m, k, 0.8 ** k) for m in ("ma-aldi-ew", "pmala")
         for k in range(6)],
    )
    write_csv(
        root / "exp2-gauss4d" / "tuning.csv",
        ("step_size", "acceptance", "mse"),
        [(0.01, 0.8, 2e-5), (0.05, 0.5, 1e-5), (0.2, 0.2, 5e-5)],
    )
    write_csv(
        root / "exp3-odeip" / "posterior.csv",
        ("method", "s", "chain_mean", "chain_std", "analytic_mean",
         "analytic_std", "truth"),
        [(m, s, 1.0 / s, 0.1, 1.0 / s, 0.08, 1.0 / s + 0.05)
         for m in ("ma-aldi-ew", "pmala") for s in range(1, 5)],
    )
    for name in ("triangular", "uniform"):
        rows = []
        nodes = (0.25, 0.5, 0.75)
        for i, x in enumerate(nodes):
            for j, y in enumerate(nodes):
                rows.append((x, y, 0.11, 0.1, 0.1 * (i - j)))
        write_csv(
            root / "bias-lab" / f"grid_{name}.csv",
            ("x", "y", "invariant", "product_target", "relative_error"),
            rows,
        )
    return root
