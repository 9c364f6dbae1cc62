//! Command implementations. Each returns a structured `Report`; input
//! problems surface as `CliError::Input` and exit with code 2, while a
//! refuted or invalid verdict exits with code 1.

use sha2::{Digest, Sha256};

use multigame::bayes::{is_bne, FiniteBayesianGame, StrategyMapProfile};
use multigame::catalog;
use multigame::game::MixedStrategy;
use multigame::multi::MultiGame;
use multigame::rational::{format_rational, int, parse_rational, rat, Rational};
use multigame::regularity::{
    extended_profile, prior_independence_audit, verify_type_regularity, vertex_regularity_search,
    RegularityStatus, Witness,
};
use multigame::simplex::SimplexPoint;
use multigame::solver::{best_response_set, pure_ne_enumerate, support_enumeration_2p};
use multigame::staged::{spe_with_belief, TrustStageGame};
use multigame::transform::mg_to_finite_bayesian;

use crate::gamefile::{parse_game_file, realize, realize_strategy_map, ParsedGame};
use crate::report::{
    equilibrium_entries, extension_formula, grid_section, status_of, strategy_probs,
    theta_coords, violation_entry, BneSection, LocalGameSection, RegularitySection, Report,
    SolveSection, Status, TrustNodeEntry, TrustSection, ViolationEntry, WitnessSection,
};

#[derive(Debug)]
pub enum CliError {
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
        }
    }
}

fn input<T>(message: impl std::fmt::Display) -> Result<T, CliError> {
    Err(CliError::Input(message.to_string()))
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

fn read_file(path: &std::path::Path) -> Result<(String, String), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let d = digest(text.as_bytes());
    Ok((text, d))
}

fn load(path: &std::path::Path) -> Result<(ParsedGame, String), CliError> {
    let (text, d) = read_file(path)?;
    let file = parse_game_file(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let game = realize(&file).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((game, d))
}

fn blank_report(command: &str) -> Report {
    Report {
        command: command.to_string(),
        input_digest: None,
        strategy_digest: None,
        seed: None,
        status: Status::Valid,
        solve: None,
        regularity: None,
        bne: None,
        trust: None,
        local_game: None,
        notes: None,
    }
}

pub fn cmd_solve(path: &std::path::Path) -> Result<Report, CliError> {
    let (game, d) = load(path)?;
    let ParsedGame::NormalForm(g) = game else {
        return input(format!(
            "solve needs a normal_form file, got kind {:?}",
            game.kind()
        ));
    };
    let pure = pure_ne_enumerate(&g);
    let mut section = SolveSection {
        agents: g.agents(),
        pure_equilibria: equilibrium_entries(&g, &pure),
        support_equilibria: None,
        degenerate_supports: None,
        fully_enumerated: None,
    };
    if g.agents() == 2 {
        let support = support_enumeration_2p(&g).expect("2-agent game");
        section.support_equilibria = Some(equilibrium_entries(&g, &support));
        section.fully_enumerated = Some(support.fully_enumerated());
        section.degenerate_supports = Some(support.degenerate_supports);
    }
    let mut report = blank_report("solve");
    report.input_digest = Some(d);
    report.status = Status::Valid;
    report.solve = Some(section);
    Ok(report)
}

fn regularity_of(mg: &MultiGame, grid: u32) -> RegularitySection {
    let vertex = vertex_regularity_search(mg);
    let labels = mg.actions().labels().to_vec();
    let mut section = RegularitySection {
        vertex_status: status_of(vertex.status),
        vertex_profiles_checked: vertex.profiles_checked,
        witness: None,
        counterexample: None,
        grid: None,
        notes: vertex.notes.clone(),
    };
    match vertex.status {
        RegularityStatus::Certified => {
            let w = vertex.witness.expect("certified search carries a witness");
            section.witness = Some(WitnessSection {
                strategies: w
                    .per_agent()
                    .iter()
                    .map(|per_vertex| per_vertex.iter().map(strategy_probs).collect())
                    .collect(),
                extension: extension_formula(&labels, w.per_agent()),
            });
            let grid_report = verify_type_regularity(mg, &w, grid);
            section.grid = Some(grid_section(&labels, grid, &grid_report));
        }
        _ => {
            if let Some(v) = vertex.violations.first() {
                section.counterexample = Some(violation_entry(&labels, v));
            }
        }
    }
    section
}

fn overall_regularity_status(section: &RegularitySection) -> Status {
    match (section.vertex_status, section.grid.as_ref()) {
        (Status::Certified, Some(grid)) => grid.status,
        (s, _) => s,
    }
}

pub fn cmd_check_regularity(
    path: &std::path::Path,
    grid: u32,
    seed: u64,
) -> Result<Report, CliError> {
    let (game, d) = load(path)?;
    let mut notes = Vec::new();
    let mg = match game {
        ParsedGame::Multi(mg) | ParsedGame::Pd(mg) => mg,
        ParsedGame::OwnTypeLinear(own) => {
            notes.push("own-type-linear input transformed to its multi-game form".to_string());
            multigame::transform::to_mg(&own).map_err(|e| CliError::Input(e.to_string()))?
        }
        other => {
            return input(format!(
                "check-regularity needs a multi_game, pd_dg or own-type type_linear file, got kind {:?}",
                other.kind()
            ))
        }
    };
    let section = regularity_of(&mg, grid);
    let mut report = blank_report("check-regularity");
    if !notes.is_empty() {
        report.notes = Some(notes);
    }
    report.input_digest = Some(d);
    report.seed = Some(seed);
    report.status = overall_regularity_status(&section);
    report.regularity = Some(section);
    Ok(report)
}

fn bne_section(
    game: &FiniteBayesianGame,
    sigma: &StrategyMapProfile,
    priors: usize,
    seed: u64,
) -> Result<(BneSection, Status), CliError> {
    let audit = prior_independence_audit(game, sigma, priors, seed)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let section = BneSection {
        local_ne_everywhere: audit.local_ne_everywhere,
        local_violations: audit
            .local_violations
            .iter()
            .map(|t| game.type_profile_label(t))
            .collect(),
        point_mass_priors: audit.point_mass_bne.len(),
        point_mass_all_bne: audit.point_mass_bne.iter().all(|&b| b),
        random_priors: audit.random_prior_bne.len(),
        random_all_bne: audit.random_prior_bne.iter().all(|&b| b),
        agreement: audit.agreement,
    };
    let status = if section.local_ne_everywhere && section.agreement {
        Status::Valid
    } else {
        Status::Invalid
    };
    Ok((section, status))
}

pub fn cmd_verify_bne(
    game_path: &std::path::Path,
    strategy_path: &std::path::Path,
    priors: usize,
    seed: u64,
) -> Result<Report, CliError> {
    let (game, game_digest) = load(game_path)?;
    let ParsedGame::Bayesian(game, file_prior) = game else {
        return input(format!(
            "verify-bne needs a bayesian_finite game file, got kind {:?}",
            game.kind()
        ));
    };
    let (text, strategy_digest) = read_file(strategy_path)?;
    let strategy_file = parse_game_file(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", strategy_path.display())))?;
    let sigma = realize_strategy_map(&strategy_file, &game)
        .map_err(|e| CliError::Input(format!("{}: {e}", strategy_path.display())))?;

    let (section, status) = bne_section(&game, &sigma, priors, seed)?;
    let mut notes = Vec::new();
    if let Some(p) = file_prior {
        let under_file_prior =
            is_bne(&game, &sigma, &p).map_err(|e| CliError::Input(e.to_string()))?;
        notes.push(format!("BNE under the file's own prior: {under_file_prior}"));
    }
    let mut report = blank_report("verify-bne");
    report.input_digest = Some(game_digest);
    report.strategy_digest = Some(strategy_digest);
    report.seed = Some(seed);
    report.status = status;
    report.bne = Some(section);
    if !notes.is_empty() {
        report.notes = Some(notes);
    }
    Ok(report)
}

pub struct ExampleArgs {
    pub name: String,
    pub belief: Option<String>,
    pub params: Option<String>,
    pub theta1: Option<String>,
    pub theta2: Option<String>,
    pub grid: u32,
    pub priors: usize,
    pub seed: u64,
    pub steps: u32,
}

fn parse_flag_rational(name: &str, value: &str) -> Result<Rational, CliError> {
    parse_rational(value).map_err(|e| CliError::Input(format!("--{name}: {e}")))
}

fn example_digest(args: &ExampleArgs) -> String {
    let canonical = format!(
        "example:{}:belief={:?}:params={:?}:theta1={:?}:theta2={:?}:grid={}:priors={}:seed={}:steps={}",
        args.name,
        args.belief,
        args.params,
        args.theta1,
        args.theta2,
        args.grid,
        args.priors,
        args.seed,
        args.steps
    );
    digest(canonical.as_bytes())
}

pub fn cmd_example(args: &ExampleArgs) -> Result<Report, CliError> {
    let mut report = blank_report("example");
    report.command = format!("example {}", args.name);
    report.input_digest = Some(example_digest(args));
    report.seed = Some(args.seed);
    match args.name.as_str() {
        "trust" => example_trust(args, &mut report)?,
        "markets" => example_markets(args, &mut report)?,
        "pd" => example_pd(args, &mut report)?,
        "coordination" => example_coordination(args, &mut report)?,
        other => return input(format!(
            "unknown example {other:?}; known names: pd, trust, markets, coordination"
        )),
    }
    Ok(report)
}

fn example_trust(args: &ExampleArgs, report: &mut Report) -> Result<(), CliError> {
    let theta1 = match &args.theta1 {
        Some(s) => parse_flag_rational("theta1", s)?,
        None => rat(1, 4),
    };
    let steps = args.steps.max(1) as i64;
    let sender_grid: Vec<Rational> = (0..=steps).map(|k| rat(k, steps)).collect();
    let step = rat(1, steps);
    let game = TrustStageGame::new(sender_grid, theta1, vec![int(0), rat(2, 3)], step)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let belief = match &args.belief {
        Some(s) => parse_flag_rational("belief", s)?,
        None => rat(1, 2),
    };
    let spe = spe_with_belief(&game, &belief).map_err(|e| CliError::Input(e.to_string()))?;
    report.status = Status::Valid;
    report.trust = Some(TrustSection {
        theta1: format_rational(game.theta1()),
        theta2: game.theta2().iter().map(format_rational).collect(),
        belief_in_selfish: format_rational(&belief),
        receiver_policy: spe
            .receiver_policy
            .iter()
            .map(|n| TrustNodeEntry {
                y: format_rational(&n.y),
                theta2: format_rational(&n.theta2),
                best: n.best.iter().map(format_rational).collect(),
            })
            .collect(),
        sender_optimal: spe.sender_optimal.iter().map(format_rational).collect(),
        sender_value: format_rational(&spe.sender_value),
        threshold: spe.threshold.as_ref().map(format_rational),
    });
    Ok(())
}

fn example_markets(args: &ExampleArgs, report: &mut Report) -> Result<(), CliError> {
    let mg = catalog::markets_multigame();
    let section = regularity_of(&mg, args.grid);
    // the example's headline is the vertex certification; the grid findings
    // are reported verbatim alongside it
    report.status = section.vertex_status;
    report.regularity = Some(section);
    Ok(())
}

fn example_pd(args: &ExampleArgs, report: &mut Report) -> Result<(), CliError> {
    let params: Vec<Rational> = match &args.params {
        Some(s) => s
            .split(',')
            .map(|part| parse_flag_rational("params", part.trim()))
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![int(5), int(3), int(1), int(0), int(2), int(0)],
    };
    if params.len() != 6 {
        return input(format!(
            "--params needs 6 comma-separated rationals t,r,p,s,y,z; got {}",
            params.len()
        ));
    }
    let mg = multigame::staged::build_pd_dg(
        params[0].clone(),
        params[1].clone(),
        params[2].clone(),
        params[3].clone(),
        params[4].clone(),
        params[5].clone(),
    )
    .map_err(|e| CliError::Input(e.to_string()))?;
    let section = regularity_of(&mg, args.grid);
    report.status = section.vertex_status;

    // optional spotlight on one local game with the extended witness
    if let (Some(t1), Some(t2)) = (&args.theta1, &args.theta2) {
        let t1 = parse_flag_rational("theta1", t1)?;
        let t2 = parse_flag_rational("theta2", t2)?;
        let theta = vec![
            SimplexPoint::from_scalar(&t1).map_err(|e| CliError::Input(e.to_string()))?,
            SimplexPoint::from_scalar(&t2).map_err(|e| CliError::Input(e.to_string()))?,
        ];
        if let Some(w) = &section.witness {
            let witness = Witness::new(
                &mg,
                w.strategies
                    .iter()
                    .map(|per_vertex| {
                        per_vertex
                            .iter()
                            .map(|probs| {
                                MixedStrategy::new(
                                    probs.iter().map(|p| parse_rational(p).unwrap()).collect(),
                                )
                                .unwrap()
                            })
                            .collect()
                    })
                    .collect(),
            )
            .expect("witness round-trips");
            let profile = extended_profile(&witness, &theta);
            let local = mg.local_game(&theta).expect("valid scalars");
            let nash =
                multigame::solver::is_nash(&local, &profile).expect("dimensions agree");
            let deviation = if nash {
                None
            } else {
                let mut found = None;
                for agent in 0..2 {
                    let current = local.mixed_payoff(&profile).expect("dimensions")[agent].clone();
                    let br = best_response_set(&local, agent, &profile).expect("dimensions");
                    let best = local
                        .action_payoff(agent, br[0], &profile)
                        .expect("dimensions");
                    if best > current {
                        found = Some(ViolationEntry {
                            theta: theta_coords(&theta),
                            agent: agent + 1,
                            deviation: mg.actions().label(agent, br[0]).to_string(),
                            gain: format_rational(&(best - current)),
                        });
                        break;
                    }
                }
                found
            };
            report.local_game = Some(LocalGameSection {
                theta: theta_coords(&theta),
                extended_strategies: profile.iter().map(strategy_probs).collect(),
                is_nash: nash,
                profitable_deviation: deviation,
            });
        }
    }
    report.regularity = Some(section);
    Ok(())
}

fn example_coordination(args: &ExampleArgs, report: &mut Report) -> Result<(), CliError> {
    let mg = catalog::coordination_dg(2, 1, 2, 1);
    let game = mg_to_finite_bayesian(&mg, &catalog::unit_interval_grid(1))
        .expect("vertex grid is valid");
    let sigma =
        StrategyMapProfile::constant_pure(&game, &[0, 0]).expect("two actions per agent");
    let (section, status) = bne_section(&game, &sigma, args.priors, args.seed)?;
    report.status = status;
    report.bne = Some(section);
    report.notes = Some(vec![
        "constant strategy map: both agents always play a1".to_string(),
    ]);
    Ok(())
}
