//! Game-file format: a TOML document declaring exactly one game kind, with
//! every rational written as a `"p/q"` string. Parsing validates against the
//! core invariants and reports the offending field; serialization emits a
//! document that parses back to the same game.

use serde::{Deserialize, Serialize};

use multigame::bayes::{FiniteBayesianGame, Prior, StrategyMapProfile};
use multigame::game::{ActionSpace, MixedStrategy, NormalFormGame};
use multigame::multi::{GeneralizedMultiGame, MultiGame, TypeSpace};
use multigame::rational::{format_rational, parse_rational, Rational};
use multigame::simplex::SimplexPoint;
use multigame::staged::{build_pd_dg, TrustStageGame};
use multigame::transform::{OwnTypeLinearGame, TypeLinearGame};

#[derive(Debug)]
pub struct FileError(pub String);

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FileError {}

fn err<T>(context: &str, message: impl std::fmt::Display) -> Result<T, FileError> {
    Err(FileError(format!("{context}: {message}")))
}

/// Top-level document. `kind` selects which section must be present.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameFile {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<NormalFormSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multi_game: Option<MultiGameSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generalized_multi_game: Option<GeneralizedSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bayesian_finite: Option<BayesianSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_linear: Option<TypeLinearSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trust_dg: Option<TrustSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_dg: Option<PdSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_map: Option<StrategyMapSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormalFormSection {
    /// Per-agent action labels.
    pub actions: Vec<Vec<String>>,
    /// Per-agent flat payoff tables in row-major profile order (last agent
    /// fastest), rationals as "p/q" strings.
    pub payoffs: Vec<Vec<String>>,
}

/// Either the whole simplex or an explicit list of simplex points.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TypeSpaceSection {
    Keyword(String),
    Points(Vec<Vec<String>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasicGameSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub payoffs: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiGameSection {
    pub actions: Vec<Vec<String>>,
    pub type_spaces: Vec<TypeSpaceSection>,
    pub basic: Vec<BasicGameSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OwnedBasicSection {
    /// 1-based owner agent index k.
    pub owner: usize,
    /// 1-based dimension index j.
    pub dim: usize,
    pub payoffs: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneralizedSection {
    pub actions: Vec<Vec<String>>,
    pub dims: usize,
    pub type_spaces: Vec<TypeSpaceSection>,
    pub basic: Vec<OwnedBasicSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BayesianSection {
    pub actions: Vec<Vec<String>>,
    pub types: Vec<Vec<String>>,
    /// `utilities[agent][type_profile][action_profile]`, both row-major.
    pub utilities: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prior: Option<PriorSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PriorSection {
    /// Masses over joint type profiles, row-major.
    pub masses: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientSection {
    /// 1-based agent i.
    pub agent: usize,
    /// 1-based agent k whose type these coefficients weight.
    pub about: usize,
    /// One m-vector per action profile, row-major.
    pub vectors: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TypeLinearSection {
    pub actions: Vec<Vec<String>>,
    pub dims: usize,
    pub own_type_only: bool,
    /// Per-agent finite sets of raw nonnegative type vectors.
    pub raw_types: Vec<Vec<Vec<String>>>,
    pub coeff: Vec<CoefficientSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrustSection {
    pub sender_grid: Vec<String>,
    pub theta1: String,
    pub theta2: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub receiver_step: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PdSection {
    pub t: String,
    pub r: String,
    pub p: String,
    pub s: String,
    pub y: String,
    pub z: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategyMapSection {
    /// `maps[agent][type_index][action]` probabilities, positional in the
    /// game file's type order.
    pub maps: Vec<Vec<Vec<String>>>,
}

/// A parsed game of whichever kind the file declared.
#[derive(Debug, Clone)]
pub enum ParsedGame {
    NormalForm(NormalFormGame),
    Multi(MultiGame),
    Generalized(GeneralizedMultiGame),
    Bayesian(FiniteBayesianGame, Option<Prior>),
    TypeLinear(TypeLinearGame),
    OwnTypeLinear(OwnTypeLinearGame),
    Trust(TrustStageGame),
    Pd(MultiGame),
}

impl ParsedGame {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedGame::NormalForm(_) => "normal_form",
            ParsedGame::Multi(_) => "multi_game",
            ParsedGame::Generalized(_) => "generalized_multi_game",
            ParsedGame::Bayesian(..) => "bayesian_finite",
            ParsedGame::TypeLinear(_) => "type_linear",
            ParsedGame::OwnTypeLinear(_) => "type_linear",
            ParsedGame::Trust(_) => "trust_dg",
            ParsedGame::Pd(_) => "pd_dg",
        }
    }
}

pub fn parse_game_file(text: &str) -> Result<GameFile, FileError> {
    toml::from_str(text).map_err(|e| FileError(format!("parse error: {e}")))
}

fn rational_at(context: &str, s: &str) -> Result<Rational, FileError> {
    parse_rational(s).map_err(|e| FileError(format!("{context}: {e}")))
}

fn parse_actions(labels: &[Vec<String>]) -> Result<ActionSpace, FileError> {
    ActionSpace::from_labels(labels.to_vec()).map_err(|e| FileError(format!("actions: {e}")))
}

fn parse_tables(
    context: &str,
    actions: &ActionSpace,
    payoffs: &[Vec<String>],
) -> Result<NormalFormGame, FileError> {
    if payoffs.len() != actions.agents() {
        return err(
            context,
            format!(
                "expected {} payoff tables, got {}",
                actions.agents(),
                payoffs.len()
            ),
        );
    }
    let want = actions.num_profiles();
    let profiles: Vec<Vec<usize>> = actions.profiles().collect();
    let mut tables = Vec::with_capacity(payoffs.len());
    for (i, table) in payoffs.iter().enumerate() {
        if table.len() != want {
            // name the first missing (or first extra) cell
            let at = table.len().min(want.saturating_sub(1));
            return err(
                &format!("{context}.payoffs[{i}]"),
                format!(
                    "expected {want} entries, got {}; first missing cell is profile {}",
                    table.len(),
                    actions.profile_label(&profiles[at])
                ),
            );
        }
        let mut row = Vec::with_capacity(want);
        for (p, cell) in table.iter().enumerate() {
            row.push(rational_at(
                &format!("{context}.payoffs[{i}][{p}]"),
                cell,
            )?);
        }
        tables.push(row);
    }
    NormalFormGame::from_tables(actions.clone(), tables).map_err(|e| FileError(format!("{context}: {e}")))
}

fn parse_type_spaces(
    context: &str,
    dims: usize,
    sections: &[TypeSpaceSection],
) -> Result<Vec<TypeSpace>, FileError> {
    sections
        .iter()
        .enumerate()
        .map(|(i, ts)| match ts {
            TypeSpaceSection::Keyword(k) if k == "full_simplex" => Ok(TypeSpace::FullSimplex),
            TypeSpaceSection::Keyword(k) => err(
                &format!("{context}.type_spaces[{i}]"),
                format!("unknown keyword {k:?}, expected \"full_simplex\" or a point list"),
            ),
            TypeSpaceSection::Points(points) => {
                let parsed = points
                    .iter()
                    .enumerate()
                    .map(|(p, coords)| {
                        let c = coords
                            .iter()
                            .enumerate()
                            .map(|(j, s)| {
                                rational_at(
                                    &format!("{context}.type_spaces[{i}][{p}][{j}]"),
                                    s,
                                )
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        if c.len() != dims {
                            return err(
                                &format!("{context}.type_spaces[{i}][{p}]"),
                                format!("expected {dims} coordinates, got {}", c.len()),
                            );
                        }
                        SimplexPoint::new(c).map_err(|e| {
                            FileError(format!("{context}.type_spaces[{i}][{p}]: {e}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TypeSpace::Finite(parsed))
            }
        })
        .collect()
}

/// Validate and convert the file into a core game.
pub fn realize(file: &GameFile) -> Result<ParsedGame, FileError> {
    match file.kind.as_str() {
        "normal_form" => {
            let section = file
                .normal_form
                .as_ref()
                .ok_or_else(|| FileError("kind normal_form needs a [normal_form] table".into()))?;
            let actions = parse_actions(&section.actions)?;
            Ok(ParsedGame::NormalForm(parse_tables(
                "normal_form",
                &actions,
                &section.payoffs,
            )?))
        }
        "multi_game" => {
            let section = file
                .multi_game
                .as_ref()
                .ok_or_else(|| FileError("kind multi_game needs a [multi_game] table".into()))?;
            let actions = parse_actions(&section.actions)?;
            if section.basic.is_empty() {
                return err("multi_game", "needs at least one basic game");
            }
            let basic = section
                .basic
                .iter()
                .enumerate()
                .map(|(j, b)| parse_tables(&format!("multi_game.basic[{j}]"), &actions, &b.payoffs))
                .collect::<Result<Vec<_>, _>>()?;
            let type_spaces =
                parse_type_spaces("multi_game", basic.len(), &section.type_spaces)?;
            MultiGame::new(basic, type_spaces)
                .map(ParsedGame::Multi)
                .map_err(|e| FileError(format!("multi_game: {e}")))
        }
        "generalized_multi_game" => {
            let section = file.generalized_multi_game.as_ref().ok_or_else(|| {
                FileError("kind generalized_multi_game needs a [generalized_multi_game] table".into())
            })?;
            let actions = parse_actions(&section.actions)?;
            let n = actions.agents();
            let m = section.dims;
            let mut grid: Vec<Vec<Option<NormalFormGame>>> = vec![vec![None; m]; n];
            for (idx, b) in section.basic.iter().enumerate() {
                let context = format!("generalized_multi_game.basic[{idx}]");
                if b.owner == 0 || b.owner > n {
                    return err(&context, format!("owner {} out of range 1..={n}", b.owner));
                }
                if b.dim == 0 || b.dim > m {
                    return err(&context, format!("dim {} out of range 1..={m}", b.dim));
                }
                if grid[b.owner - 1][b.dim - 1].is_some() {
                    return err(&context, format!("duplicate (owner {}, dim {})", b.owner, b.dim));
                }
                grid[b.owner - 1][b.dim - 1] =
                    Some(parse_tables(&context, &actions, &b.payoffs)?);
            }
            let mut basic = Vec::with_capacity(n);
            for (k, row) in grid.into_iter().enumerate() {
                let mut games = Vec::with_capacity(m);
                for (j, g) in row.into_iter().enumerate() {
                    games.push(g.ok_or_else(|| {
                        FileError(format!(
                            "generalized_multi_game: missing basic game (owner {}, dim {})",
                            k + 1,
                            j + 1
                        ))
                    })?);
                }
                basic.push(games);
            }
            let type_spaces =
                parse_type_spaces("generalized_multi_game", m, &section.type_spaces)?;
            GeneralizedMultiGame::new(basic, type_spaces)
                .map(ParsedGame::Generalized)
                .map_err(|e| FileError(format!("generalized_multi_game: {e}")))
        }
        "bayesian_finite" => {
            let section = file.bayesian_finite.as_ref().ok_or_else(|| {
                FileError("kind bayesian_finite needs a [bayesian_finite] table".into())
            })?;
            let actions = parse_actions(&section.actions)?;
            let mut utility = Vec::with_capacity(section.utilities.len());
            for (i, per_type) in section.utilities.iter().enumerate() {
                let mut rows = Vec::with_capacity(per_type.len());
                for (t, row) in per_type.iter().enumerate() {
                    rows.push(
                        row.iter()
                            .enumerate()
                            .map(|(a, s)| {
                                rational_at(
                                    &format!("bayesian_finite.utilities[{i}][{t}][{a}]"),
                                    s,
                                )
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
                utility.push(rows);
            }
            let game = FiniteBayesianGame::new(actions, section.types.clone(), utility)
                .map_err(|e| FileError(format!("bayesian_finite: {e}")))?;
            let prior = match &section.prior {
                Some(p) => {
                    let masses = p
                        .masses
                        .iter()
                        .enumerate()
                        .map(|(i, s)| rational_at(&format!("bayesian_finite.prior.masses[{i}]"), s))
                        .collect::<Result<Vec<_>, _>>()?;
                    Some(
                        Prior::new(&game, masses)
                            .map_err(|e| FileError(format!("bayesian_finite.prior: {e}")))?,
                    )
                }
                None => None,
            };
            Ok(ParsedGame::Bayesian(game, prior))
        }
        "type_linear" => {
            let section = file.type_linear.as_ref().ok_or_else(|| {
                FileError("kind type_linear needs a [type_linear] table".into())
            })?;
            let actions = parse_actions(&section.actions)?;
            let n = actions.agents();
            let m = section.dims;
            let profiles = actions.num_profiles();
            let raw_types = section
                .raw_types
                .iter()
                .enumerate()
                .map(|(i, points)| {
                    points
                        .iter()
                        .enumerate()
                        .map(|(p, coords)| {
                            coords
                                .iter()
                                .enumerate()
                                .map(|(j, s)| {
                                    rational_at(
                                        &format!("type_linear.raw_types[{i}][{p}][{j}]"),
                                        s,
                                    )
                                })
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let parse_vectors = |context: &str,
                                 vectors: &[Vec<String>]|
             -> Result<Vec<Vec<Rational>>, FileError> {
                if vectors.len() != profiles {
                    return err(context, format!("expected {profiles} vectors, got {}", vectors.len()));
                }
                vectors
                    .iter()
                    .enumerate()
                    .map(|(p, v)| {
                        if v.len() != m {
                            return err(
                                &format!("{context}[{p}]"),
                                format!("expected {m} coefficients, got {}", v.len()),
                            );
                        }
                        v.iter()
                            .enumerate()
                            .map(|(j, s)| rational_at(&format!("{context}[{p}][{j}]"), s))
                            .collect()
                    })
                    .collect()
            };
            let mut slots: Vec<Vec<Option<Vec<Vec<Rational>>>>> = vec![vec![None; n]; n];
            for (idx, c) in section.coeff.iter().enumerate() {
                let context = format!("type_linear.coeff[{idx}]");
                if c.agent == 0 || c.agent > n {
                    return err(&context, format!("agent {} out of range 1..={n}", c.agent));
                }
                if c.about == 0 || c.about > n {
                    return err(&context, format!("about {} out of range 1..={n}", c.about));
                }
                if slots[c.agent - 1][c.about - 1].is_some() {
                    return err(&context, format!("duplicate (agent {}, about {})", c.agent, c.about));
                }
                slots[c.agent - 1][c.about - 1] =
                    Some(parse_vectors(&format!("{context}.vectors"), &c.vectors)?);
            }
            if section.own_type_only {
                let coeff = slots
                    .into_iter()
                    .enumerate()
                    .map(|(i, mut row)| {
                        for (k, slot) in row.iter().enumerate() {
                            if k != i && slot.is_some() {
                                return err(
                                    "type_linear",
                                    format!(
                                        "own_type_only file lists cross coefficients (agent {}, about {})",
                                        i + 1,
                                        k + 1
                                    ),
                                );
                            }
                        }
                        row[i].take().ok_or_else(|| {
                            FileError(format!(
                                "type_linear: missing coefficients for agent {}",
                                i + 1
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                OwnTypeLinearGame::new(actions, m, coeff, raw_types)
                    .map(ParsedGame::OwnTypeLinear)
                    .map_err(|e| FileError(format!("type_linear: {e}")))
            } else {
                let zero = vec![vec![Rational::from_integer(0.into()); m]; profiles];
                let coeff = slots
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|slot| slot.unwrap_or_else(|| zero.clone()))
                            .collect()
                    })
                    .collect();
                TypeLinearGame::new(actions, m, coeff, raw_types)
                    .map(ParsedGame::TypeLinear)
                    .map_err(|e| FileError(format!("type_linear: {e}")))
            }
        }
        "trust_dg" => {
            let section = file
                .trust_dg
                .as_ref()
                .ok_or_else(|| FileError("kind trust_dg needs a [trust_dg] table".into()))?;
            let sender_grid = section
                .sender_grid
                .iter()
                .enumerate()
                .map(|(i, s)| rational_at(&format!("trust_dg.sender_grid[{i}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            let theta1 = rational_at("trust_dg.theta1", &section.theta1)?;
            let theta2 = section
                .theta2
                .iter()
                .enumerate()
                .map(|(i, s)| rational_at(&format!("trust_dg.theta2[{i}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            let step = match &section.receiver_step {
                Some(s) => rational_at("trust_dg.receiver_step", s)?,
                None => Rational::from_integer(1.into()),
            };
            TrustStageGame::new(sender_grid, theta1, theta2, step)
                .map(ParsedGame::Trust)
                .map_err(|e| FileError(format!("trust_dg: {e}")))
        }
        "pd_dg" => {
            let section = file
                .pd_dg
                .as_ref()
                .ok_or_else(|| FileError("kind pd_dg needs a [pd_dg] table".into()))?;
            let get = |name: &str, s: &str| rational_at(&format!("pd_dg.{name}"), s);
            build_pd_dg(
                get("t", &section.t)?,
                get("r", &section.r)?,
                get("p", &section.p)?,
                get("s", &section.s)?,
                get("y", &section.y)?,
                get("z", &section.z)?,
            )
            .map(ParsedGame::Pd)
            .map_err(|e| FileError(format!("pd_dg: {e}")))
        }
        "strategy_map" => err(
            "kind",
            "strategy_map files accompany a game file; pass them as the strategy argument",
        ),
        other => err("kind", format!("unknown game kind {other:?}")),
    }
}

/// Parse a strategy-map file against its game.
pub fn realize_strategy_map(
    file: &GameFile,
    game: &FiniteBayesianGame,
) -> Result<StrategyMapProfile, FileError> {
    if file.kind != "strategy_map" {
        return err("kind", format!("expected strategy_map, got {:?}", file.kind));
    }
    let section = file
        .strategy_map
        .as_ref()
        .ok_or_else(|| FileError("kind strategy_map needs a [strategy_map] table".into()))?;
    if section.maps.len() != game.agents() {
        return err(
            "strategy_map.maps",
            format!("expected {} agents, got {}", game.agents(), section.maps.len()),
        );
    }
    let mut maps = Vec::with_capacity(section.maps.len());
    for (i, per_type) in section.maps.iter().enumerate() {
        let want = game.type_labels()[i].len();
        if per_type.len() != want {
            return err(
                &format!("strategy_map.maps[{i}]"),
                format!(
                    "agent {} has {want} types ({}), got {} strategies",
                    i + 1,
                    game.type_labels()[i].join(", "),
                    per_type.len()
                ),
            );
        }
        let mut row = Vec::with_capacity(want);
        for (t, probs) in per_type.iter().enumerate() {
            let parsed = probs
                .iter()
                .enumerate()
                .map(|(a, s)| rational_at(&format!("strategy_map.maps[{i}][{t}][{a}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            row.push(
                MixedStrategy::new(parsed)
                    .map_err(|e| FileError(format!("strategy_map.maps[{i}][{t}]: {e}")))?,
            );
        }
        maps.push(row);
    }
    StrategyMapProfile::new(game, maps).map_err(|e| FileError(format!("strategy_map: {e}")))
}

fn format_table(game: &NormalFormGame) -> Vec<Vec<String>> {
    (0..game.agents())
        .map(|i| {
            game.actions()
                .profiles()
                .map(|p| format_rational(game.payoff(i, &p).expect("complete tensor")))
                .collect()
        })
        .collect()
}

fn format_type_spaces(spaces: &[TypeSpace]) -> Vec<TypeSpaceSection> {
    spaces
        .iter()
        .map(|ts| match ts {
            TypeSpace::FullSimplex => TypeSpaceSection::Keyword("full_simplex".into()),
            TypeSpace::Finite(points) => TypeSpaceSection::Points(
                points
                    .iter()
                    .map(|p| p.coords().iter().map(format_rational).collect())
                    .collect(),
            ),
        })
        .collect()
}

/// Serialize a parsed game back to a document that parses to the same game.
pub fn serialize_game(game: &ParsedGame, name: Option<&str>) -> GameFile {
    let mut file = GameFile {
        kind: game.kind().to_string(),
        name: name.map(str::to_string),
        normal_form: None,
        multi_game: None,
        generalized_multi_game: None,
        bayesian_finite: None,
        type_linear: None,
        trust_dg: None,
        pd_dg: None,
        strategy_map: None,
    };
    match game {
        ParsedGame::NormalForm(g) => {
            file.normal_form = Some(NormalFormSection {
                actions: g.actions().labels().to_vec(),
                payoffs: format_table(g),
            });
        }
        ParsedGame::Multi(mg) | ParsedGame::Pd(mg) => {
            file.kind = "multi_game".into();
            file.multi_game = Some(MultiGameSection {
                actions: mg.actions().labels().to_vec(),
                type_spaces: format_type_spaces(mg.type_spaces()),
                basic: mg
                    .basic_games()
                    .iter()
                    .map(|g| BasicGameSection {
                        name: None,
                        payoffs: format_table(g),
                    })
                    .collect(),
            });
        }
        ParsedGame::Generalized(gmg) => {
            let mut basic = Vec::new();
            for k in 0..gmg.agents() {
                for j in 0..gmg.dims() {
                    basic.push(OwnedBasicSection {
                        owner: k + 1,
                        dim: j + 1,
                        payoffs: format_table(gmg.basic(k, j)),
                    });
                }
            }
            file.generalized_multi_game = Some(GeneralizedSection {
                actions: gmg.actions().labels().to_vec(),
                dims: gmg.dims(),
                type_spaces: format_type_spaces(gmg.type_spaces()),
                basic,
            });
        }
        ParsedGame::Bayesian(g, prior) => {
            let utilities = (0..g.agents())
                .map(|i| {
                    g.type_profiles()
                        .map(|theta| {
                            g.actions()
                                .profiles()
                                .map(|a| {
                                    format_rational(
                                        g.utility(i, &a, &theta).expect("complete tensor"),
                                    )
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect();
            file.bayesian_finite = Some(BayesianSection {
                actions: g.actions().labels().to_vec(),
                types: g.type_labels().to_vec(),
                utilities,
                prior: prior.as_ref().map(|p| PriorSection {
                    masses: p.masses().iter().map(format_rational).collect(),
                }),
            });
        }
        ParsedGame::TypeLinear(g) => {
            let mut coeff = Vec::new();
            for i in 0..g.actions().agents() {
                for k in 0..g.actions().agents() {
                    coeff.push(CoefficientSection {
                        agent: i + 1,
                        about: k + 1,
                        vectors: g
                            .actions()
                            .profiles()
                            .map(|p| {
                                g.coefficient(i, k, &p)
                                    .expect("complete map")
                                    .iter()
                                    .map(format_rational)
                                    .collect()
                            })
                            .collect(),
                    });
                }
            }
            file.type_linear = Some(TypeLinearSection {
                actions: g.actions().labels().to_vec(),
                dims: g.dims(),
                own_type_only: false,
                raw_types: g
                    .raw_types()
                    .iter()
                    .map(|pts| {
                        pts.iter()
                            .map(|v| v.iter().map(format_rational).collect())
                            .collect()
                    })
                    .collect(),
                coeff,
            });
        }
        ParsedGame::OwnTypeLinear(g) => {
            let coeff = (0..g.actions().agents())
                .map(|i| CoefficientSection {
                    agent: i + 1,
                    about: i + 1,
                    vectors: g
                        .actions()
                        .profiles()
                        .map(|p| {
                            g.coefficient(i, &p)
                                .expect("complete map")
                                .iter()
                                .map(format_rational)
                                .collect()
                        })
                        .collect(),
                })
                .collect();
            file.type_linear = Some(TypeLinearSection {
                actions: g.actions().labels().to_vec(),
                dims: g.dims(),
                own_type_only: true,
                raw_types: g
                    .raw_types()
                    .iter()
                    .map(|pts| {
                        pts.iter()
                            .map(|v| v.iter().map(format_rational).collect())
                            .collect()
                    })
                    .collect(),
                coeff,
            });
        }
        ParsedGame::Trust(g) => {
            file.trust_dg = Some(TrustSection {
                sender_grid: g.sender_grid().iter().map(format_rational).collect(),
                theta1: format_rational(g.theta1()),
                theta2: g.theta2().iter().map(format_rational).collect(),
                receiver_step: Some(format_rational(g.receiver_step())),
            });
        }
    }
    file
}

pub fn to_toml_string(file: &GameFile) -> String {
    toml::to_string_pretty(file).expect("serializable schema")
}
