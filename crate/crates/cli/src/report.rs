//! Structured report schema and the human rendering. Structured output is
//! stable JSON: field order is fixed by the struct declarations, rationals
//! are "p/q" strings, and nothing time- or machine-dependent is included, so
//! reports are byte-identical across runs given the same inputs and seed.

use serde::Serialize;

use multigame::game::{MixedStrategy, NormalFormGame};
use multigame::rational::format_rational;
use multigame::regularity::{RegularityReport as CoreRegularity, RegularityStatus, Violation};
use multigame::simplex::SimplexPoint;
use multigame::solver::NEResult;

/// How many grid violations a report lists verbatim; the count is always
/// exact.
pub const MAX_LISTED_VIOLATIONS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Certified,
    Refuted,
    Inconclusive,
    Valid,
    Invalid,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Certified | Status::Valid => 0,
            Status::Refuted | Status::Inconclusive | Status::Invalid => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
            Status::Valid => "valid",
            Status::Invalid => "invalid",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bne: Option<BneSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trust: Option<TrustSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_game: Option<LocalGameSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumEntry {
    /// Pure profiles by action label; mixed strategies as probability rows.
    pub strategies: Vec<Vec<String>>,
    pub pure: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<String>,
    pub payoffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveSection {
    pub agents: usize,
    pub pure_equilibria: Vec<EquilibriumEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_equilibria: Option<Vec<EquilibriumEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_supports: Option<Vec<(Vec<usize>, Vec<usize>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fully_enumerated: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSection {
    /// `strategies[agent][vertex]` as probability vectors.
    pub strategies: Vec<Vec<Vec<String>>>,
    /// Rendering of the extension formula per agent.
    pub extension: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationEntry {
    pub theta: Vec<Vec<String>>,
    pub agent: usize,
    pub deviation: String,
    pub gain: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridSection {
    pub resolution: u32,
    pub profiles_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<ViolationEntry>,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularitySection {
    pub vertex_status: Status,
    pub vertex_profiles_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<ViolationEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSection>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BneSection {
    pub local_ne_everywhere: bool,
    pub local_violations: Vec<String>,
    pub point_mass_priors: usize,
    pub point_mass_all_bne: bool,
    pub random_priors: usize,
    pub random_all_bne: bool,
    pub agreement: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrustSection {
    pub theta1: String,
    pub theta2: Vec<String>,
    pub belief_in_selfish: String,
    pub receiver_policy: Vec<TrustNodeEntry>,
    pub sender_optimal: Vec<String>,
    pub sender_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrustNodeEntry {
    pub y: String,
    pub theta2: String,
    pub best: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalGameSection {
    pub theta: Vec<Vec<String>>,
    pub extended_strategies: Vec<Vec<String>>,
    pub is_nash: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profitable_deviation: Option<ViolationEntry>,
}

pub fn strategy_probs(s: &MixedStrategy) -> Vec<String> {
    s.probs().iter().map(format_rational).collect()
}

pub fn theta_coords(theta: &[SimplexPoint]) -> Vec<Vec<String>> {
    theta
        .iter()
        .map(|p| p.coords().iter().map(format_rational).collect())
        .collect()
}

pub fn equilibrium_entries(game: &NormalFormGame, result: &NEResult) -> Vec<EquilibriumEntry> {
    result
        .equilibria
        .iter()
        .map(|ne| {
            let payoffs = game
                .mixed_payoff(&ne.strategies)
                .expect("dimensions agree")
                .iter()
                .map(format_rational)
                .collect();
            let profile = ne.pure.then(|| {
                let pure: Vec<usize> = ne
                    .strategies
                    .iter()
                    .map(|s| s.as_pure().expect("pure"))
                    .collect();
                game.actions().profile_label(&pure)
            });
            EquilibriumEntry {
                strategies: ne.strategies.iter().map(strategy_probs).collect(),
                pure: ne.pure,
                profile,
                payoffs,
            }
        })
        .collect()
}

pub fn violation_entry(game_labels: &[Vec<String>], v: &Violation) -> ViolationEntry {
    ViolationEntry {
        theta: theta_coords(&v.theta),
        agent: v.agent + 1,
        deviation: game_labels[v.agent][v.deviation].clone(),
        gain: format_rational(&v.gain),
    }
}

pub fn status_of(core: RegularityStatus) -> Status {
    match core {
        RegularityStatus::Certified => Status::Certified,
        RegularityStatus::Refuted => Status::Refuted,
        RegularityStatus::Inconclusive => Status::Inconclusive,
    }
}

pub fn grid_section(
    labels: &[Vec<String>],
    resolution: u32,
    core: &CoreRegularity,
) -> GridSection {
    GridSection {
        resolution,
        profiles_checked: core.profiles_checked,
        violation_count: core.violations.len(),
        violations: core
            .violations
            .iter()
            .take(MAX_LISTED_VIOLATIONS)
            .map(|v| violation_entry(labels, v))
            .collect(),
        status: status_of(core.status),
    }
}

/// One-line rendering of the barycentric extension per agent, e.g.
/// `sigma_1(theta) = theta_1*(D) + theta_2*(C)`.
pub fn extension_formula(labels: &[Vec<String>], witness: &[Vec<MixedStrategy>]) -> Vec<String> {
    witness
        .iter()
        .enumerate()
        .map(|(i, per_vertex)| {
            let terms: Vec<String> = per_vertex
                .iter()
                .enumerate()
                .map(|(j, s)| format!("theta_{}*({})", j + 1, s.describe(Some(&labels[i]))))
                .collect();
            format!("sigma_{}(theta) = {}", i + 1, terms.join(" + "))
        })
        .collect()
}

/// Render the report for terminals. Deterministic: same inputs and seed,
/// same bytes.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("command: {}", report.command));
    if let Some(d) = &report.input_digest {
        line(format!("input: {d}"));
    }
    if let Some(d) = &report.strategy_digest {
        line(format!("strategy: {d}"));
    }
    if let Some(seed) = report.seed {
        line(format!("seed: {seed}"));
    }
    line(format!("status: {}", report.status.label()));

    if let Some(solve) = &report.solve {
        line(format!("pure equilibria: {}", solve.pure_equilibria.len()));
        for e in &solve.pure_equilibria {
            line(format!(
                "  {} payoffs ({})",
                e.profile.clone().unwrap_or_default(),
                e.payoffs.join(", ")
            ));
        }
        if let Some(support) = &solve.support_equilibria {
            line(format!("support-enumeration equilibria: {}", support.len()));
            for e in support {
                let kind = if e.pure { "pure" } else { "mixed" };
                let strategies: Vec<String> =
                    e.strategies.iter().map(|s| format!("({})", s.join(", "))).collect();
                line(format!(
                    "  [{kind}] {} payoffs ({})",
                    strategies.join(" x "),
                    e.payoffs.join(", ")
                ));
            }
        }
        if let Some(degenerate) = &solve.degenerate_supports {
            if !degenerate.is_empty() {
                line(format!(
                    "degenerate supports (solution continuum, not enumerated): {}",
                    degenerate.len()
                ));
            }
        }
        if let Some(full) = solve.fully_enumerated {
            line(format!("enumeration exhaustive: {full}"));
        }
    }

    if let Some(reg) = &report.regularity {
        line(format!(
            "vertex regularity: {} ({} vertex profiles)",
            reg.vertex_status.label(),
            reg.vertex_profiles_checked
        ));
        if let Some(w) = &reg.witness {
            for f in &w.extension {
                line(format!("  {f}"));
            }
        }
        if let Some(c) = &reg.counterexample {
            line(format!(
                "  counterexample: theta = {:?}, agent {}, deviation {} gains {}",
                c.theta, c.agent, c.deviation, c.gain
            ));
        }
        if let Some(grid) = &reg.grid {
            line(format!(
                "grid d={}: {} profiles, {} violations -> {}",
                grid.resolution,
                grid.profiles_checked,
                grid.violation_count,
                grid.status.label()
            ));
            for v in &grid.violations {
                line(format!(
                    "  at theta = {:?}: agent {} gains {} by {}",
                    v.theta, v.agent, v.gain, v.deviation
                ));
            }
            if grid.violation_count > grid.violations.len() {
                line(format!(
                    "  ... and {} more",
                    grid.violation_count - grid.violations.len()
                ));
            }
        }
        for n in &reg.notes {
            line(format!("note: {n}"));
        }
    }

    if let Some(bne) = &report.bne {
        line(format!(
            "(A) local Nash everywhere: {}",
            bne.local_ne_everywhere
        ));
        for v in &bne.local_violations {
            line(format!("  violated at type profile {v}"));
        }
        line(format!(
            "(B) point-mass priors: {} checked, all BNE: {}",
            bne.point_mass_priors, bne.point_mass_all_bne
        ));
        line(format!(
            "(B) random priors: {} sampled, all BNE: {}",
            bne.random_priors, bne.random_all_bne
        ));
        line(format!("equivalence agreement: {}", bne.agreement));
    }

    if let Some(trust) = &report.trust {
        line(format!(
            "sender type {} against receiver types {{{}}}",
            trust.theta1,
            trust.theta2.join(", ")
        ));
        line(format!("belief in selfish receiver: {}", trust.belief_in_selfish));
        for node in &trust.receiver_policy {
            line(format!(
                "  receiver at (y={}, theta2={}) returns {{{}}}",
                node.y,
                node.theta2,
                node.best.join(", ")
            ));
        }
        line(format!(
            "sender optimal amounts: {{{}}} with expected utility {}",
            trust.sender_optimal.join(", "),
            trust.sender_value
        ));
        match &trust.threshold {
            Some(t) => line(format!("indifference threshold: p0 = {t}")),
            None => line("indifference threshold: none (sender always sends)".into()),
        }
    }

    if let Some(local) = &report.local_game {
        line(format!("local game at theta = {:?}", local.theta));
        let strategies: Vec<String> = local
            .extended_strategies
            .iter()
            .map(|s| format!("({})", s.join(", ")))
            .collect();
        line(format!("extended witness: {}", strategies.join(" x ")));
        line(format!("is a Nash equilibrium there: {}", local.is_nash));
        if let Some(d) = &local.profitable_deviation {
            line(format!(
                "  agent {} gains {} by deviating to {}",
                d.agent, d.gain, d.deviation
            ));
        }
    }

    for n in report.notes.iter().flatten() {
        line(format!("note: {n}"));
    }
    out
}
