//! Command implementations. Every command is a pure function of its
//! configuration (seeds included), so identical invocations emit identical
//! bytes.

use serde::Serialize;

use qerasure::capacities::{
    capacity_curve, depolarizing_ci_zero_crossing, linear_grid, max_coherent_information,
    mixed_capacities, pec_capacities, qec_capacities, CurveFamily, DepolarizingThresholds,
};
use qerasure::channels::{choi_distance, depolarizing, pec, qec, KrausChannel};
use qerasure::info::{
    basis_povm, binary_entropy, blahut_arimoto, coherent_information, holevo_chi,
    induced_classical_channel, Ensemble,
};
use qerasure::linalg::{fidelity_pure, DensityMatrix, PureState};
use qerasure::protocols::{
    epr_pair, mixed_split_construction, simulate_epr_through_qec, split_qec_construction,
    surviving_pair_state, teleport,
};
use qerasure::rng::{trial_seed, SplitMix64};
use qerasure::stab::{threshold_scan, PatternSampling};

use crate::config::{ChannelKind, Cli, Command, Family, Format, Grid};
use crate::output::{csv_table, emit, fmt_f64, json_document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;

/// Largest Monte Carlo block length the CLI accepts.
const MAX_BLOCK_LENGTH: usize = 2048;

type CmdResult = Result<(String, i32), String>;

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Curves { family, grid } => cmd_curves(*family, *grid, cli.format),
        Command::CoherentInfo { channel, eps, tol } => {
            cmd_coherent_info(*channel, *eps, *tol, cli.format)
        }
        Command::Chi { channel, eps } => cmd_chi(*channel, *eps, cli.format),
        Command::HashMc {
            n,
            eps,
            rates,
            trials,
            seed,
            fixed_weight,
        } => cmd_hash_mc(*n, *eps, rates, *trials, *seed, *fixed_weight, cli.format),
        Command::Teleport {
            eps,
            pairs,
            seed,
            states,
        } => cmd_teleport(*eps, *pairs, *seed, *states, cli.format),
        Command::SplitCheck { eps, delta } => cmd_split_check(*eps, *delta, cli.format),
        Command::Verify { perturb_eps } => cmd_verify(*perturb_eps),
    }
}

pub fn emit_result(cli: &Cli, content: &str) -> Result<(), String> {
    emit(&cli.out, content).map_err(|e| format!("cannot write output: {e}"))
}

fn build_channel(kind: ChannelKind, eps: f64) -> Result<KrausChannel<f64>, String> {
    let ch = match kind {
        ChannelKind::Qec => qec(eps),
        ChannelKind::Pec => pec(eps),
        ChannelKind::Depolarizing => depolarizing(eps),
    };
    ch.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// curves
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CurveRow {
    x: f64,
    q: f64,
    q2: f64,
    c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rains: Option<f64>,
}

#[derive(Serialize)]
struct CurveReport {
    family: Family,
    rows: Vec<CurveRow>,
}

fn cmd_curves(family: Family, grid: Grid, format: Format) -> CmdResult {
    let lib_family = match family {
        Family::Qec => CurveFamily::Qec,
        Family::MixedEqual => CurveFamily::MixedEqual,
        Family::Pec => CurveFamily::Pec,
    };
    let curve = capacity_curve(lib_family, &grid.points()).map_err(|e| e.to_string())?;
    let rows: Vec<CurveRow> = curve
        .points
        .iter()
        .map(|p| CurveRow {
            x: curve.abscissa(p),
            q: p.q,
            q2: p.q2,
            c: p.c,
            rains: curve.rains_line,
        })
        .collect();

    let content = match format {
        Format::Json => json_document(&CurveReport { family, rows }),
        Format::Csv => {
            let header: &[&str] = if curve.rains_line.is_some() {
                &["x", "Q", "Q2", "C", "rains"]
            } else {
                &["x", "Q", "Q2", "C"]
            };
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut cells = vec![fmt_f64(r.x), fmt_f64(r.q), fmt_f64(r.q2), fmt_f64(r.c)];
                    if let Some(line) = r.rains {
                        cells.push(fmt_f64(line));
                    }
                    cells
                })
                .collect();
            csv_table(header, &body)
        }
    };
    Ok((content, EXIT_OK))
}

// ---------------------------------------------------------------------------
// coherent-info
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CoherentInfoReport {
    channel: ChannelKind,
    eps: f64,
    max_coherent_info: f64,
    bloch_x: f64,
    bloch_y: f64,
    bloch_z: f64,
}

fn cmd_coherent_info(kind: ChannelKind, eps: f64, tol: f64, format: Format) -> CmdResult {
    let ch = build_channel(kind, eps)?;
    let (value, argmax) = max_coherent_information(&ch, tol).map_err(|e| e.to_string())?;
    let (x, y, z) = argmax.bloch().map_err(|e| e.to_string())?;
    let report = CoherentInfoReport {
        channel: kind,
        eps,
        max_coherent_info: value,
        bloch_x: x,
        bloch_y: y,
        bloch_z: z,
    };
    let content = match format {
        Format::Json => json_document(&report),
        Format::Csv => csv_table(
            &["eps", "max_coherent_info", "bloch_x", "bloch_y", "bloch_z"],
            &[vec![
                fmt_f64(eps),
                fmt_f64(value),
                fmt_f64(x),
                fmt_f64(y),
                fmt_f64(z),
            ]],
        ),
    };
    Ok((content, EXIT_OK))
}

// ---------------------------------------------------------------------------
// chi
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ChiReport {
    channel: ChannelKind,
    eps: f64,
    /// Holevo chi of the uniform z-basis ensemble
    chi: f64,
    /// exact classical capacity for the erasure families; the single-use
    /// classical capacity for the depolarizing channel
    capacity_reference: f64,
}

fn cmd_chi(kind: ChannelKind, eps: f64, format: Format) -> CmdResult {
    let ch = build_channel(kind, eps)?;
    let ensemble = Ensemble::<f64>::uniform_basis(2).map_err(|e| e.to_string())?;
    let chi = holevo_chi(&ch, &ensemble).map_err(|e| e.to_string())?;
    let reference = match kind {
        ChannelKind::Qec => qec_capacities(eps).map_err(|e| e.to_string())?.c,
        ChannelKind::Pec => pec_capacities(eps).map_err(|e| e.to_string())?.c,
        ChannelKind::Depolarizing => 1.0 - binary_entropy(eps / 2.0).map_err(|e| e.to_string())?,
    };
    let report = ChiReport {
        channel: kind,
        eps,
        chi,
        capacity_reference: reference,
    };
    let content = match format {
        Format::Json => json_document(&report),
        Format::Csv => csv_table(
            &["eps", "chi", "capacity_reference"],
            &[vec![fmt_f64(eps), fmt_f64(chi), fmt_f64(reference)]],
        ),
    };
    Ok((content, EXIT_OK))
}

// ---------------------------------------------------------------------------
// hash-mc
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct HashMcRow {
    rate: f64,
    failure_rate: f64,
    trials: usize,
    n: usize,
}

#[derive(Serialize)]
struct HashMcReport {
    eps: f64,
    seed: u64,
    fixed_weight: bool,
    rows: Vec<HashMcRow>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_hash_mc(
    n: usize,
    eps: f64,
    rates: &[f64],
    trials: usize,
    seed: u64,
    fixed_weight: bool,
    format: Format,
) -> CmdResult {
    if n == 0 || n > MAX_BLOCK_LENGTH {
        return Err(format!("n = {n} outside [1, {MAX_BLOCK_LENGTH}]"));
    }
    if rates.is_empty() {
        return Err("need at least one rate".into());
    }
    let sampling = if fixed_weight {
        PatternSampling::FixedWeight
    } else {
        PatternSampling::Bernoulli
    };
    let table = threshold_scan(n, eps, rates, trials, seed, sampling).map_err(|e| e.to_string())?;
    let rows: Vec<HashMcRow> = table
        .iter()
        .map(|&(rate, failure_rate)| HashMcRow {
            rate,
            failure_rate,
            trials,
            n,
        })
        .collect();
    let content = match format {
        Format::Json => json_document(&HashMcReport {
            eps,
            seed,
            fixed_weight,
            rows,
        }),
        Format::Csv => csv_table(
            &["rate", "failure_rate", "trials", "n"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        fmt_f64(r.rate),
                        fmt_f64(r.failure_rate),
                        r.trials.to_string(),
                        r.n.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok((content, EXIT_OK))
}

// ---------------------------------------------------------------------------
// teleport
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TeleportReport {
    eps: f64,
    pairs: usize,
    seed: u64,
    survivors: usize,
    survivor_fraction: f64,
    min_pair_fidelity: f64,
    teleported_states: usize,
    min_teleport_fidelity: f64,
}

fn cmd_teleport(eps: f64, pairs: usize, seed: u64, states: usize, format: Format) -> CmdResult {
    let outcome = simulate_epr_through_qec::<f64>(eps, pairs, seed).map_err(|e| e.to_string())?;
    let min_pair_fidelity = outcome
        .surviving
        .iter()
        .map(|&i| outcome.per_pair_fidelity[i])
        .fold(f64::NAN, f64::min);

    // teleport random states over the exact surviving-pair state; the
    // state-sampling stream is split off the master seed at a reserved index
    let mut min_teleport_fidelity = f64::NAN;
    let mut teleported = 0usize;
    if !outcome.surviving.is_empty() && states > 0 {
        let pair = surviving_pair_state::<f64>().map_err(|e| e.to_string())?;
        let mut rng = SplitMix64::new(trial_seed(seed, u64::MAX));
        teleported = states.min(outcome.surviving.len());
        for _ in 0..teleported {
            let psi = PureState::<f64>::random(2, &mut rng);
            let out = teleport(&psi.projector(), &pair).map_err(|e| e.to_string())?;
            let f = fidelity_pure(&psi, &out).map_err(|e| e.to_string())?;
            min_teleport_fidelity = if min_teleport_fidelity.is_nan() {
                f
            } else {
                min_teleport_fidelity.min(f)
            };
        }
    }

    let report = TeleportReport {
        eps,
        pairs,
        seed,
        survivors: outcome.surviving.len(),
        survivor_fraction: outcome.survivor_fraction(),
        min_pair_fidelity,
        teleported_states: teleported,
        min_teleport_fidelity,
    };
    let content = match format {
        Format::Json => json_document(&report),
        Format::Csv => csv_table(
            &[
                "eps",
                "pairs",
                "survivors",
                "survivor_fraction",
                "min_pair_fidelity",
                "teleported_states",
                "min_teleport_fidelity",
            ],
            &[vec![
                fmt_f64(report.eps),
                report.pairs.to_string(),
                report.survivors.to_string(),
                fmt_f64(report.survivor_fraction),
                fmt_f64(report.min_pair_fidelity),
                report.teleported_states.to_string(),
                fmt_f64(report.min_teleport_fidelity),
            ]],
        ),
    };
    Ok((content, EXIT_OK))
}

// ---------------------------------------------------------------------------
// split-check
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SplitCheckReport {
    eps: f64,
    delta: f64,
    receiver_distances: [f64; 2],
    tolerance: f64,
    passed: bool,
}

fn cmd_split_check(eps: f64, delta: f64, format: Format) -> CmdResult {
    let report = if delta == 0.0 {
        let (bob, charlie) = split_qec_construction::<f64>(eps).map_err(|e| e.to_string())?;
        let reference = qec(eps).map_err(|e| e.to_string())?;
        let distances = [
            choi_distance(&bob, &reference).map_err(|e| e.to_string())?,
            choi_distance(&charlie, &reference).map_err(|e| e.to_string())?,
        ];
        let tolerance = 1e-9;
        SplitCheckReport {
            eps,
            delta,
            receiver_distances: distances,
            tolerance,
            passed: distances.iter().all(|&d| d <= tolerance),
        }
    } else {
        let record =
            mixed_split_construction::<f64>(eps, delta, 1e-8).map_err(|e| e.to_string())?;
        SplitCheckReport {
            eps,
            delta,
            receiver_distances: record.receiver_distances,
            tolerance: record.tolerance,
            passed: record.passed,
        }
    };
    let code = if report.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    let content = match format {
        Format::Json => json_document(&report),
        Format::Csv => csv_table(
            &[
                "eps",
                "delta",
                "bob_distance",
                "charlie_distance",
                "tolerance",
                "passed",
            ],
            &[vec![
                fmt_f64(report.eps),
                fmt_f64(report.delta),
                format!("{:.3e}", report.receiver_distances[0]),
                format!("{:.3e}", report.receiver_distances[1]),
                format!("{:.1e}", report.tolerance),
                report.passed.to_string(),
            ]],
        ),
    };
    Ok((content, code))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CheckResult {
    name: &'static str,
    claim: &'static str,
    residual: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    checks: Vec<CheckResult>,
}

fn check(name: &'static str, claim: &'static str, residual: f64, tolerance: f64) -> CheckResult {
    CheckResult {
        name,
        claim,
        residual,
        tolerance,
        passed: residual.is_finite() && residual <= tolerance,
    }
}

fn cmd_verify(perturb_eps: f64) -> CmdResult {
    let mut checks = Vec::new();
    let eps_grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let mixed_state = DensityMatrix::<f64>::maximally_mixed(2).map_err(|e| e.to_string())?;

    // closed forms over a dense grid, including reductions and ordering
    {
        let mut worst = 0.0f64;
        for &eps in &linear_grid::<f64>(0.0, 1.0, 101) {
            let p = qec_capacities(eps).map_err(|e| e.to_string())?;
            worst = worst
                .max((p.q - (1.0 - 2.0 * eps).max(0.0)).abs())
                .max((p.q2 - (1.0 - eps)).abs())
                .max((p.c - (1.0 - eps)).abs());
            if p != mixed_capacities(eps, 0.0).map_err(|e| e.to_string())?
                || pec_capacities(eps).map_err(|e| e.to_string())?
                    != mixed_capacities(0.0, eps).map_err(|e| e.to_string())?
            {
                worst = f64::INFINITY;
            }
            if !(0.0 <= p.q && p.q <= p.q2 && p.q2 <= p.c && p.c <= 1.0) {
                worst = f64::INFINITY;
            }
        }
        checks.push(check(
            "closed_form_capacities",
            "Q=max(0,1-2e), Q2=C=1-e for erasure; mixed formula reduces to both pure families",
            worst,
            1e-12,
        ));
    }

    // coherent-information maximizer against the capacity formula
    {
        let mut worst_value = 0.0f64;
        let mut worst_argmax = 0.0f64;
        for &eps in &eps_grid {
            let ch = qec(eps).map_err(|e| e.to_string())?;
            let (value, argmax) = max_coherent_information(&ch, 1e-6).map_err(|e| e.to_string())?;
            worst_value = worst_value.max((value - (1.0 - 2.0 * eps).max(0.0)).abs());
            let (x, y, z) = argmax.bloch().map_err(|e| e.to_string())?;
            if eps < 0.5 {
                worst_argmax = worst_argmax.max((x * x + y * y + z * z).sqrt());
            } else {
                worst_argmax = worst_argmax.max(1.0 - argmax.purity());
            }
        }
        checks.push(check(
            "coherent_info_max_matches_capacity",
            "maximal single-use coherent information of the erasure channel equals max(0,1-2e)",
            worst_value,
            1e-4,
        ));
        checks.push(check(
            "coherent_info_argmax_regimes",
            "argmax is maximally mixed below e=1/2 and a pure state at or above it",
            worst_argmax,
            1e-3,
        ));
    }

    // phase-erasure coherent information at the maximally mixed input
    {
        let mut worst = 0.0f64;
        for &eps in &linear_grid::<f64>(0.0, 1.0, 101) {
            let ci = coherent_information(&pec(eps).map_err(|e| e.to_string())?, &mixed_state)
                .map_err(|e| e.to_string())?;
            worst = worst.max((ci - (1.0 - eps)).abs());
        }
        checks.push(check(
            "pec_coherent_info_formula",
            "coherent information of the phase-erasure channel at I/2 equals 1-e",
            worst,
            1e-8,
        ));
    }

    // Holevo bound over random ensembles
    {
        let mut rng = SplitMix64::new(11);
        let mut worst = f64::NEG_INFINITY;
        for &eps in &eps_grid {
            let ch = qec(eps).map_err(|e| e.to_string())?;
            for _ in 0..200 {
                let size = 1 + (rng.next_u64() % 4) as usize;
                let raw: Vec<f64> = (0..size).map(|_| rng.next_f64() + 1e-9).collect();
                let total: f64 = raw.iter().sum();
                let probs: Vec<f64> = raw.iter().map(|x| x / total).collect();
                let states: Vec<_> = (0..size)
                    .map(|_| DensityMatrix::<f64>::random(2, &mut rng))
                    .collect();
                let ens = Ensemble::new(probs, states).map_err(|e| e.to_string())?;
                let chi = holevo_chi(&ch, &ens).map_err(|e| e.to_string())?;
                worst = worst.max(chi - (1.0 - eps));
            }
        }
        checks.push(check(
            "holevo_bound_erasure",
            "Holevo chi of any ensemble through the erasure channel stays at or below 1-e",
            worst,
            1e-8,
        ));
    }

    // induced classical channels under Blahut-Arimoto
    {
        let inputs = [
            PureState::<f64>::basis(2, 0).map_err(|e| e.to_string())?,
            PureState::<f64>::basis(2, 1).map_err(|e| e.to_string())?,
        ];
        let mut worst_erasure = 0.0f64;
        let mut worst_depol = 0.0f64;
        for &eps in &eps_grid {
            let induced = induced_classical_channel(
                &qec(eps).map_err(|e| e.to_string())?,
                &inputs,
                &basis_povm(3),
            )
            .map_err(|e| e.to_string())?;
            let cap = blahut_arimoto(&induced, 1e-9).map_err(|e| e.to_string())?;
            worst_erasure = worst_erasure.max((cap - (1.0 - eps)).abs());

            let induced = induced_classical_channel(
                &depolarizing(eps).map_err(|e| e.to_string())?,
                &inputs,
                &basis_povm(2),
            )
            .map_err(|e| e.to_string())?;
            let cap = blahut_arimoto(&induced, 1e-9).map_err(|e| e.to_string())?;
            let expect = 1.0 - binary_entropy(eps / 2.0).map_err(|e| e.to_string())?;
            worst_depol = worst_depol.max((cap - expect).abs());
        }
        checks.push(check(
            "erasure_classical_simulation",
            "z-basis use of the erasure channel is a classical erasure channel of capacity 1-e",
            worst_erasure,
            1e-6,
        ));
        checks.push(check(
            "depolarizing_classical_simulation",
            "z-basis use of the depolarizing channel reaches 1-H2(e/2)",
            worst_depol,
            1e-6,
        ));
    }

    // fair-coin splitting marginals (the perturbation hook shifts the
    // reference channel to prove this check can fail)
    {
        let mut worst = 0.0f64;
        for i in 0..=5 {
            let eps = 0.5 + i as f64 / 10.0;
            let (bob, charlie) = split_qec_construction::<f64>(eps).map_err(|e| e.to_string())?;
            let reference = qec((eps + perturb_eps).min(1.0)).map_err(|e| e.to_string())?;
            worst = worst
                .max(choi_distance(&bob, &reference).map_err(|e| e.to_string())?)
                .max(choi_distance(&charlie, &reference).map_err(|e| e.to_string())?);
        }
        checks.push(check(
            "split_marginal_choi",
            "each fair-coin receiver marginal equals the erasure channel of strength e",
            worst,
            1e-9,
        ));

        let mut worst_mixed = 0.0f64;
        for (eps, delta) in [(0.4, 0.2), (0.5, 0.0)] {
            let record =
                mixed_split_construction::<f64>(eps, delta, 1e-8).map_err(|e| e.to_string())?;
            worst_mixed = worst_mixed
                .max(record.receiver_distances[0])
                .max(record.receiver_distances[1]);
        }
        checks.push(check(
            "mixed_split_marginal_choi",
            "the series-parallel splitting reproduces the mixed erasure/phase-erasure channel",
            worst_mixed,
            1e-8,
        ));
    }

    // teleportation fidelity with perfect pairs
    {
        let pair = epr_pair::<f64>().projector();
        let mut rng = SplitMix64::new(12);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let psi = PureState::<f64>::random(2, &mut rng);
            let out = teleport(&psi.projector(), &pair).map_err(|e| e.to_string())?;
            let f = fidelity_pure(&psi, &out).map_err(|e| e.to_string())?;
            worst = worst.max((f - 1.0).abs());
        }
        checks.push(check(
            "teleport_fidelity",
            "teleportation over a perfect pair reproduces the input exactly",
            worst,
            1e-10,
        ));
    }

    // survivor statistics of pair sharing through the erasure channel
    {
        let outcome =
            simulate_epr_through_qec::<f64>(0.25, 10_000, 1).map_err(|e| e.to_string())?;
        checks.push(check(
            "epr_survivor_fraction",
            "sharing pairs at e=0.25 leaves a survivor fraction within 0.02 of 0.75",
            (outcome.survivor_fraction() - 0.75).abs(),
            0.02,
        ));
    }

    // zero crossing of the depolarizing single-use coherent information
    {
        let (lo, hi) = depolarizing_ci_zero_crossing::<f64>(1e-4).map_err(|e| e.to_string())?;
        let mid = 0.5 * (lo + hi);
        let published = DepolarizingThresholds::<f64>::default().nonadditivity_low;
        checks.push(check(
            "depolarizing_ci_zero_crossing",
            "single-use coherent information at I/2 crosses zero at the published window edge",
            (mid - published).abs(),
            5e-4,
        ));
    }

    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport { passed, checks };
    let code = if passed { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((json_document(&report), code))
}
