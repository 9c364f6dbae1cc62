//! Finite Bayesian games: private types, joint priors, strategy maps, and
//! the conditional expected-utility / Bayesian Nash equilibrium checks.

use itertools::Itertools;
use num_traits::Zero;
use rand::Rng;

use crate::error::GameError;
use crate::game::{ActionSpace, MixedStrategy, NormalFormGame};
use crate::rational::{format_rational, Rational};

/// n-agent game with finite opaque type sets and a complete utility tensor
/// over (agent, action profile, type profile).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBayesianGame {
    actions: ActionSpace,
    /// Per-agent type labels; types are addressed by index.
    types: Vec<Vec<String>>,
    /// `utility[agent][type_profile_index][action_profile_index]`
    utility: Vec<Vec<Vec<Rational>>>,
}

impl FiniteBayesianGame {
    pub fn new(
        actions: ActionSpace,
        types: Vec<Vec<String>>,
        utility: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, GameError> {
        let n = actions.agents();
        if types.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "type sets".into(),
                expected: n,
                got: types.len(),
            });
        }
        for (i, t) in types.iter().enumerate() {
            if t.is_empty() {
                return Err(GameError::InvalidGame(format!("agent {i} has no types")));
            }
        }
        let num_type_profiles: usize = types.iter().map(Vec::len).product();
        let num_action_profiles = actions.num_profiles();
        if utility.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "utility tensors".into(),
                expected: n,
                got: utility.len(),
            });
        }
        for (i, per_type) in utility.iter().enumerate() {
            if per_type.len() != num_type_profiles {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {i} utility over type profiles"),
                    expected: num_type_profiles,
                    got: per_type.len(),
                });
            }
            for (t, per_action) in per_type.iter().enumerate() {
                if per_action.len() != num_action_profiles {
                    return Err(GameError::DimensionMismatch {
                        context: format!("agent {i} utility at type profile {t}"),
                        expected: num_action_profiles,
                        got: per_action.len(),
                    });
                }
            }
        }
        Ok(FiniteBayesianGame {
            actions,
            types,
            utility,
        })
    }

    pub fn actions(&self) -> &ActionSpace {
        &self.actions
    }

    pub fn agents(&self) -> usize {
        self.actions.agents()
    }

    pub fn type_labels(&self) -> &[Vec<String>] {
        &self.types
    }

    pub fn type_counts(&self) -> Vec<usize> {
        self.types.iter().map(Vec::len).collect()
    }

    pub fn num_type_profiles(&self) -> usize {
        self.types.iter().map(Vec::len).product()
    }

    /// Joint type profiles (index vectors) in row-major order.
    pub fn type_profiles(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.types
            .iter()
            .map(|t| 0..t.len())
            .multi_cartesian_product()
    }

    pub fn type_profile_index(&self, theta: &[usize]) -> Result<usize, GameError> {
        if theta.len() != self.agents() {
            return Err(GameError::DimensionMismatch {
                context: "type profile".into(),
                expected: self.agents(),
                got: theta.len(),
            });
        }
        let mut idx = 0;
        for (i, &t) in theta.iter().enumerate() {
            let c = self.types[i].len();
            if t >= c {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} type index {t} out of range ({c} types)"
                )));
            }
            idx = idx * c + t;
        }
        Ok(idx)
    }

    pub fn utility(
        &self,
        agent: usize,
        profile: &[usize],
        theta: &[usize],
    ) -> Result<&Rational, GameError> {
        let t = self.type_profile_index(theta)?;
        let a = self.actions.profile_index(profile)?;
        Ok(&self.utility[agent][t][a])
    }

    /// Restriction to a fixed type profile: the local game.
    pub fn local_game(&self, theta: &[usize]) -> Result<NormalFormGame, GameError> {
        let t = self.type_profile_index(theta)?;
        let tables = (0..self.agents())
            .map(|i| self.utility[i][t].clone())
            .collect();
        NormalFormGame::from_tables(self.actions.clone(), tables)
    }

    pub fn type_profile_label(&self, theta: &[usize]) -> String {
        let parts: Vec<&str> = theta
            .iter()
            .enumerate()
            .map(|(i, &t)| self.types[i][t].as_str())
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Joint probability distribution over a game's type profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prior {
    /// One mass per type profile, row-major order; sums to 1.
    masses: Vec<Rational>,
}

impl Prior {
    pub fn new(game: &FiniteBayesianGame, masses: Vec<Rational>) -> Result<Self, GameError> {
        if masses.len() != game.num_type_profiles() {
            return Err(GameError::DimensionMismatch {
                context: "prior masses".into(),
                expected: game.num_type_profiles(),
                got: masses.len(),
            });
        }
        if masses.iter().any(|p| p < &Rational::zero()) {
            return Err(GameError::InvalidDistribution("negative prior mass".into()));
        }
        let total: Rational = masses.iter().sum();
        if total != Rational::from_integer(1.into()) {
            return Err(GameError::InvalidDistribution(format!(
                "prior mass sums to {}, not 1",
                format_rational(&total)
            )));
        }
        Ok(Prior { masses })
    }

    pub fn uniform(game: &FiniteBayesianGame) -> Self {
        let k = game.num_type_profiles();
        let w = Rational::new(1.into(), (k as i64).into());
        Prior {
            masses: vec![w; k],
        }
    }

    /// All mass on one joint type profile — the prior family used to go from
    /// all-priors BNE back to local Nash equilibria.
    pub fn point_mass(game: &FiniteBayesianGame, theta: &[usize]) -> Result<Self, GameError> {
        let idx = game.type_profile_index(theta)?;
        let mut masses = vec![Rational::zero(); game.num_type_profiles()];
        masses[idx] = Rational::from_integer(1.into());
        Ok(Prior { masses })
    }

    /// Seeded random prior: integer numerators drawn uniformly from
    /// `0..=denominator` per type profile (redrawn if all zero), normalized
    /// to total mass 1. Zero masses are allowed and exercised deliberately.
    pub fn random<R: Rng>(game: &FiniteBayesianGame, rng: &mut R, denominator: u32) -> Self {
        let k = game.num_type_profiles();
        loop {
            let draws: Vec<i64> = (0..k)
                .map(|_| rng.gen_range(0..=denominator) as i64)
                .collect();
            let total: i64 = draws.iter().sum();
            if total == 0 {
                continue;
            }
            let masses = draws
                .into_iter()
                .map(|d| Rational::new(d.into(), total.into()))
                .collect();
            return Prior { masses };
        }
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    pub fn mass(&self, index: usize) -> &Rational {
        &self.masses[index]
    }

    /// Marginal probability of agent `i` having type `type_index`.
    pub fn marginal(
        &self,
        game: &FiniteBayesianGame,
        agent: usize,
        type_index: usize,
    ) -> Result<Rational, GameError> {
        if agent >= game.agents() {
            return Err(GameError::AgentOutOfRange {
                agent,
                agents: game.agents(),
            });
        }
        let mut total = Rational::zero();
        for theta in game.type_profiles() {
            if theta[agent] == type_index {
                total += &self.masses[game.type_profile_index(&theta)?];
            }
        }
        Ok(total)
    }

    /// Conditional distribution over opponents' type profiles given agent
    /// `i`'s own type. Errors when the marginal is zero.
    pub fn conditional(
        &self,
        game: &FiniteBayesianGame,
        agent: usize,
        type_index: usize,
    ) -> Result<Vec<(Vec<usize>, Rational)>, GameError> {
        let marginal = self.marginal(game, agent, type_index)?;
        if marginal.is_zero() {
            return Err(GameError::ZeroMarginal { agent, type_index });
        }
        let mut out = Vec::new();
        for theta in game.type_profiles() {
            if theta[agent] != type_index {
                continue;
            }
            let mass = &self.masses[game.type_profile_index(&theta)?];
            if !mass.is_zero() {
                out.push((theta, mass / &marginal));
            }
        }
        Ok(out)
    }
}

/// One strategy map per agent: a mixed strategy for each of the agent's
/// types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyMapProfile {
    /// `maps[agent][type_index]`
    maps: Vec<Vec<MixedStrategy>>,
}

impl StrategyMapProfile {
    pub fn new(
        game: &FiniteBayesianGame,
        maps: Vec<Vec<MixedStrategy>>,
    ) -> Result<Self, GameError> {
        if maps.len() != game.agents() {
            return Err(GameError::DimensionMismatch {
                context: "strategy maps".into(),
                expected: game.agents(),
                got: maps.len(),
            });
        }
        for (i, per_type) in maps.iter().enumerate() {
            if per_type.len() != game.type_labels()[i].len() {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {i} strategy map over types"),
                    expected: game.type_labels()[i].len(),
                    got: per_type.len(),
                });
            }
            for (t, s) in per_type.iter().enumerate() {
                if s.len() != game.actions().count(i) {
                    return Err(GameError::DimensionMismatch {
                        context: format!("agent {i} strategy at type {t}"),
                        expected: game.actions().count(i),
                        got: s.len(),
                    });
                }
            }
        }
        Ok(StrategyMapProfile { maps })
    }

    /// Every agent plays the same fixed action at every type.
    pub fn constant_pure(
        game: &FiniteBayesianGame,
        actions: &[usize],
    ) -> Result<Self, GameError> {
        let maps = actions
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let s = MixedStrategy::pure(a, game.actions().count(i))?;
                Ok(vec![s; game.type_labels()[i].len()])
            })
            .collect::<Result<Vec<_>, GameError>>()?;
        StrategyMapProfile::new(game, maps)
    }

    pub fn strategy(&self, agent: usize, type_index: usize) -> &MixedStrategy {
        &self.maps[agent][type_index]
    }

    pub fn maps(&self) -> &[Vec<MixedStrategy>] {
        &self.maps
    }

    /// The joint mixed profile this map prescribes at a type profile.
    pub fn evaluate(&self, theta: &[usize]) -> Vec<MixedStrategy> {
        theta
            .iter()
            .enumerate()
            .map(|(i, &t)| self.maps[i][t].clone())
            .collect()
    }

    /// Copy with agent `agent`'s strategy at one type replaced.
    pub fn with_strategy(
        &self,
        agent: usize,
        type_index: usize,
        strategy: MixedStrategy,
    ) -> Self {
        let mut out = self.clone();
        out.maps[agent][type_index] = strategy;
        out
    }
}

/// Expected payoff of each of agent `agent`'s pure actions under the
/// conditional over opponents' types, plus the payoff of the prescribed
/// strategy itself. One pass over the conditional covers every deviation,
/// since the conditional expectation is linear in the agent's own strategy.
fn conditional_action_values(
    game: &FiniteBayesianGame,
    sigma: &StrategyMapProfile,
    prior: &Prior,
    agent: usize,
    type_index: usize,
) -> Result<(Vec<Rational>, Rational), GameError> {
    let conditional = prior.conditional(game, agent, type_index)?;
    let count = game.actions().count(agent);
    let mut action_values = vec![Rational::zero(); count];
    for (theta, weight) in conditional {
        let t = game.type_profile_index(&theta)?;
        let profile = sigma.evaluate(&theta);
        for (a_idx, pure) in game.actions().profiles().enumerate() {
            let mut w = weight.clone();
            for (k, &a) in pure.iter().enumerate() {
                if k == agent {
                    continue;
                }
                if profile[k].prob(a).is_zero() {
                    w = Rational::zero();
                    break;
                }
                w *= profile[k].prob(a);
            }
            if !w.is_zero() {
                action_values[pure[agent]] += w * &game.utility[agent][t][a_idx];
            }
        }
    }
    let own = sigma.strategy(agent, type_index);
    let current = (0..count)
        .filter(|&a| !own.prob(a).is_zero())
        .map(|a| own.prob(a) * &action_values[a])
        .sum();
    Ok((action_values, current))
}

/// Conditional expected utility of agent `i` at its type `theta_i` under the
/// strategy map profile `sigma`:
/// `sum_{theta_{-i}} p(theta_{-i} | theta_i) * u_i(sigma_i(theta_i),
/// sigma_{-i}(theta_{-i}), theta)`.
pub fn bayesian_expected_utility(
    game: &FiniteBayesianGame,
    sigma: &StrategyMapProfile,
    prior: &Prior,
    agent: usize,
    type_index: usize,
) -> Result<Rational, GameError> {
    conditional_action_values(game, sigma, prior, agent, type_index).map(|(_, current)| current)
}

/// Bayesian Nash equilibrium check: at every type with positive marginal, no
/// pure deviation raises the conditional expected utility (pure deviations
/// suffice by multilinearity). Types with zero marginal are skipped.
pub fn is_bne(
    game: &FiniteBayesianGame,
    sigma: &StrategyMapProfile,
    prior: &Prior,
) -> Result<bool, GameError> {
    for agent in 0..game.agents() {
        for type_index in 0..game.type_labels()[agent].len() {
            if prior.marginal(game, agent, type_index)?.is_zero() {
                continue;
            }
            let (action_values, current) =
                conditional_action_values(game, sigma, prior, agent, type_index)?;
            if action_values.iter().any(|v| v > &current) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
