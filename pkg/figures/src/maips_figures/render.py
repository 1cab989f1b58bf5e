"""The figure kinds and their renderers.

Every renderer reads one or two CSV artifacts from a suite output
directory and writes one image. Rendering is headless (Agg).
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import groups, load_csv

EXP1 = "exp1-bimodal"
EXP2 = "exp2-gauss4d"
EXP3 = "exp3-odeip"
BIAS = "bias-lab"


def _histogram(suite, path):
    """Accumulated position histograms against the quadrature reference."""
    table = load_csv(suite / EXP1 / "histogram.csv")
    variants = dict(groups(table, "variant"))
    methods = []
    for name in variants:
        base = name.removeprefix("ma-").removesuffix("-ew")
        if base not in methods:
            methods.append(base)
    fig, axes = plt.subplots(
        1, len(methods), figsize=(4.0 * len(methods), 3.2), sharey=True
    )
    for ax, base in zip(np.atleast_1d(axes), methods):
        adjusted = variants[f"ma-{base}-ew"]
        unadjusted = variants[base]
        centers = 0.5 * (adjusted["bin_lo"] + adjusted["bin_hi"])
        width = adjusted["bin_hi"][0] - adjusted["bin_lo"][0]
        ax.bar(centers, adjusted["sample_fraction"], width=width,
               alpha=0.6, label="adjusted")
        ax.bar(centers, unadjusted["sample_fraction"], width=width,
               fill=False, edgecolor="tab:red", label="unadjusted")
        ax.step(centers, adjusted["reference_fraction"], where="mid",
                color="black", linewidth=1.2, label="reference")
        ax.set_title(base)
        ax.set_xlabel("x")
    np.atleast_1d(axes)[0].set_ylabel("fraction")
    np.atleast_1d(axes)[-1].legend(fontsize="small")
    fig.suptitle("double-well histograms")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _convergence(suite, path):
    """Running quantile estimate per schedule on the 4d Gaussian."""
    table = load_csv(suite / EXP2 / "convergence.csv")
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    for method, sub in groups(table, "method"):
        ax.plot(sub["iteration"], sub["mean_running_estimate"],
                label=method, linewidth=1.0)
    ax.axhline(0.5, color="black", linestyle="--", linewidth=0.8)
    ax.set_xlabel("iteration")
    ax.set_ylabel("running estimate")
    ax.set_title("convergence to the reference value 1/2")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _autocorr(suite, path):
    """Estimator autocorrelation decay per schedule."""
    table = load_csv(suite / EXP2 / "autocorr.csv")
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    for method, sub in groups(table, "method"):
        ax.plot(sub["lag"], sub["autocorr"], label=method, linewidth=1.0)
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xlabel("lag")
    ax.set_ylabel("autocorrelation")
    ax.set_title("estimator autocorrelation")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _mse_acceptance(suite, path):
    """Estimator MSE across the step-size sweep, against acceptance."""
    table = load_csv(suite / EXP2 / "tuning.csv")
    order = np.argsort(table["acceptance"])
    acceptance = table["acceptance"][order]
    mse = table["mse"][order]
    step = table["step_size"][order]
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    ax.semilogy(acceptance, mse, marker="o")
    for a, m, h in zip(acceptance, mse, step):
        ax.annotate(f"h={h:.3g}", (a, m), textcoords="offset points",
                    xytext=(4, 4), fontsize="x-small")
    ax.set_xlabel("acceptance rate")
    ax.set_ylabel("replica MSE")
    ax.set_title("step-size sweep")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _posterior_bands(suite, path):
    """Chain posterior mean and spread against the analytic posterior."""
    table = load_csv(suite / EXP3 / "posterior.csv")
    by_method = list(groups(table, "method"))
    fig, axes = plt.subplots(
        1, len(by_method), figsize=(4.6 * len(by_method), 3.4), sharey=True
    )
    for ax, (method, sub) in zip(np.atleast_1d(axes), by_method):
        s = sub["s"]
        ax.fill_between(s, sub["chain_mean"] - sub["chain_std"],
                        sub["chain_mean"] + sub["chain_std"],
                        alpha=0.3, label="chain mean +/- std")
        ax.plot(s, sub["chain_mean"], linewidth=1.2)
        ax.plot(s, sub["analytic_mean"], color="black", linestyle="--",
                linewidth=1.0, label="analytic mean")
        ax.plot(s, sub["analytic_mean"] + sub["analytic_std"],
                color="black", linestyle=":", linewidth=0.8)
        ax.plot(s, sub["analytic_mean"] - sub["analytic_std"],
                color="black", linestyle=":", linewidth=0.8)
        ax.plot(s, sub["truth"], "k.", markersize=4, label="truth")
        ax.set_title(method)
        ax.set_xlabel("component")
    np.atleast_1d(axes)[0].set_ylabel("coefficient")
    np.atleast_1d(axes)[-1].legend(fontsize="small")
    fig.suptitle("inverse-problem posterior")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _bias_heatmap(suite, path):
    """Relative error of the biased schedule's invariant measure."""
    names = ("triangular", "uniform")
    fig, axes = plt.subplots(1, len(names), figsize=(4.8 * len(names), 3.8))
    for ax, name in zip(np.atleast_1d(axes), names):
        table = load_csv(suite / BIAS / f"grid_{name}.csv")
        nodes = np.unique(table["x"])
        n = nodes.size
        # Rows are written x-major, y inner.
        err = table["relative_error"].reshape(n, n)
        vmax = np.abs(err).max()
        mesh = ax.pcolormesh(nodes, nodes, err.T, cmap="RdBu_r",
                             vmin=-vmax, vmax=vmax, shading="nearest")
        fig.colorbar(mesh, ax=ax, label="relative error")
        ax.set_title(name)
        ax.set_xlabel("particle 1")
        ax.set_ylabel("particle 2")
    fig.suptitle("bias of the simultaneous schedule")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


KINDS = {
    "histogram": _histogram,
    "convergence": _convergence,
    "autocorr": _autocorr,
    "mse-acceptance": _mse_acceptance,
    "posterior-bands": _posterior_bands,
    "bias-heatmap": _bias_heatmap,
}


def render(kind, suite_root, out_path):
    """Render one figure kind from a suite directory. Returns the path."""
    try:
        renderer = KINDS[kind]
    except KeyError:
        raise ValueError(
            f"unknown kind {kind!r}; known: {', '.join(sorted(KINDS))}"
        ) from None
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    renderer(Path(suite_root), out_path)
    return out_path


def render_all(suite_root, out_dir, kinds=None):
    """Render every requested kind into out_dir as <kind>.png."""
    written = []
    for kind in kinds or KINDS:
        written.append(render(kind, suite_root, Path(out_dir) / f"{kind}.png"))
    return written
