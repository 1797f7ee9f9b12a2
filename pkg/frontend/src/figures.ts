export type FigureKind =
  | "spectrum"
  | "distribution"
  | "trajectory"
  | "sweep"
  | "disorder"
  | "detection";

export interface FigureSpec {
  id: string;
  kind: FigureKind;
  /** Unique prefix of the input CSV inside the run's output directory. */
  inputPrefix: string;
  title: string;
  xLabel: string;
  yLabel: string;
}

function spectrum(id: string, title: string): FigureSpec {
  return { id, kind: "spectrum", inputPrefix: "spectrum_", title, xLabel: "theta/pi", yLabel: "E" };
}

function distribution(id: string, title: string, which: "upper" | "lower" = "upper"): FigureSpec {
  return {
    id,
    kind: "distribution",
    inputPrefix: `distribution_${which}_`,
    title,
    xLabel: "theta/pi",
    yLabel: "site",
  };
}

function trajectory(id: string, title: string): FigureSpec {
  return { id, kind: "trajectory", inputPrefix: "trajectory_", title, xLabel: "t", yLabel: "site" };
}

function sweep(id: string, title: string): FigureSpec {
  return { id, kind: "sweep", inputPrefix: "sweep_", title, xLabel: "log10(omega)", yLabel: "fidelity" };
}

export const FIGURES: Record<string, FigureSpec> = {
  fig2a: spectrum("fig2a", "bare chain spectrum"),
  fig2b: distribution("fig2b", "zero mode distribution"),
  fig3a: spectrum("fig3a", "on-site modulated spectrum"),
  fig3b: distribution("fig3b", "upper gap state (on-site channel)"),
  fig3c: sweep("fig3c", "transfer fidelity vs rate (on-site channel)"),
  fig3d: trajectory("fig3d", "transfer at omega=5e-4 (on-site channel)"),
  fig4a: spectrum("fig4a", "fixed-NNN spectrum"),
  fig4b: distribution("fig4b", "upper gap state (fixed NNN)"),
  fig5a: spectrum("fig5a", "staggered-NNN spectrum"),
  fig5b: distribution("fig5b", "upper gap state (NNN channel)"),
  fig5c: sweep("fig5c", "transfer fidelity vs rate (NNN channel)"),
  fig5d: trajectory("fig5d", "transfer at omega=1e-5 (NNN channel)"),
  fig6a: spectrum("fig6a", "beam-splitter spectrum"),
  fig6b: distribution("fig6b", "upper gap state (beam splitter)"),
  fig6c: sweep("fig6c", "beam-splitter fidelity vs rate"),
  fig6d: trajectory("fig6d", "beam-splitter transfer at omega=1e-5"),
  fig8: {
    id: "fig8",
    kind: "disorder",
    inputPrefix: "disorder_",
    title: "disorder robustness of the beam splitter",
    xLabel: "log10(W)",
    yLabel: "mean fidelity",
  },
  fig9a: spectrum("fig9a", "super-site precursor spectrum"),
  fig9b: distribution("fig9b", "upper gap state (precursor)"),
  fig9c: distribution("fig9c", "lower gap state (precursor)", "lower"),
  fig11a: {
    id: "fig11a",
    kind: "detection",
    inputPrefix: "detection_",
    title: "detection spectrum, drive on last resonator",
    xLabel: "omega_d",
    yLabel: "site",
  },
  fig11b: {
    id: "fig11b",
    kind: "detection",
    inputPrefix: "detection_",
    title: "detection spectrum, drive on first resonator",
    xLabel: "omega_d",
    yLabel: "site",
  },
};
