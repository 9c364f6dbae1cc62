//! Normal-form games with exact rational payoffs, plus the mixed strategies
//! played in them. Local games of every Bayesian representation in this crate
//! are values of [`NormalFormGame`].

use itertools::Itertools;
use num_traits::Zero;

use crate::error::GameError;
use crate::rational::{format_rational, Rational};

/// Per-agent action sets. Actions are identified by index; labels are kept
/// for file formats and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpace {
    labels: Vec<Vec<String>>,
}

impl ActionSpace {
    pub fn from_labels(labels: Vec<Vec<String>>) -> Result<Self, GameError> {
        if labels.is_empty() {
            return Err(GameError::InvalidGame("no agents".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(GameError::InvalidGame(format!("agent {i} has no actions")));
            }
        }
        Ok(ActionSpace { labels })
    }

    /// `agents` agents with `count` actions each, labelled `a1..a<count>`.
    pub fn uniform(agents: usize, count: usize) -> Self {
        let labels = (0..agents)
            .map(|_| (1..=count).map(|k| format!("a{k}")).collect())
            .collect();
        ActionSpace::from_labels(labels).expect("positive dimensions")
    }

    pub fn agents(&self) -> usize {
        self.labels.len()
    }

    pub fn count(&self, agent: usize) -> usize {
        self.labels[agent].len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, agent: usize, action: usize) -> &str {
        &self.labels[agent][action]
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn num_profiles(&self) -> usize {
        self.labels.iter().map(Vec::len).product()
    }

    /// Joint pure profiles in row-major order (last agent fastest).
    pub fn profiles(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.labels
            .iter()
            .map(|l| 0..l.len())
            .multi_cartesian_product()
    }

    /// Row-major index of a profile; errors on out-of-range actions.
    pub fn profile_index(&self, profile: &[usize]) -> Result<usize, GameError> {
        if profile.len() != self.agents() {
            return Err(GameError::DimensionMismatch {
                context: "action profile".into(),
                expected: self.agents(),
                got: profile.len(),
            });
        }
        let mut idx = 0;
        for (agent, &a) in profile.iter().enumerate() {
            let c = self.count(agent);
            if a >= c {
                return Err(GameError::ActionOutOfRange {
                    agent,
                    action: a,
                    count: c,
                });
            }
            idx = idx * c + a;
        }
        Ok(idx)
    }

    /// Human-readable rendering of a pure profile, e.g. `(s1, s2)`.
    pub fn profile_label(&self, profile: &[usize]) -> String {
        let parts: Vec<&str> = profile
            .iter()
            .enumerate()
            .map(|(i, &a)| self.label(i, a))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Probability vector over one agent's actions; entries are nonnegative
/// rationals summing exactly to 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedStrategy {
    probs: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(probs: Vec<Rational>) -> Result<Self, GameError> {
        if probs.is_empty() {
            return Err(GameError::InvalidDistribution("empty strategy".into()));
        }
        if probs.iter().any(|p| p < &Rational::zero()) {
            return Err(GameError::InvalidDistribution(
                "negative probability".into(),
            ));
        }
        let total: Rational = probs.iter().sum();
        if total != Rational::from_integer(1.into()) {
            return Err(GameError::InvalidDistribution(format!(
                "mass sums to {}, not 1",
                format_rational(&total)
            )));
        }
        Ok(MixedStrategy { probs })
    }

    /// Degenerate distribution on a single action.
    pub fn pure(action: usize, count: usize) -> Result<Self, GameError> {
        if action >= count {
            return Err(GameError::ActionOutOfRange {
                agent: 0,
                action,
                count,
            });
        }
        let mut probs = vec![Rational::zero(); count];
        probs[action] = Rational::from_integer(1.into());
        Ok(MixedStrategy { probs })
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn prob(&self, action: usize) -> &Rational {
        &self.probs[action]
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Actions carrying positive mass, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(a, _)| a)
            .collect()
    }

    /// `Some(a)` iff the strategy is the point mass on `a`.
    pub fn as_pure(&self) -> Option<usize> {
        let s = self.support();
        if s.len() == 1 {
            Some(s[0])
        } else {
            None
        }
    }

    pub fn describe(&self, labels: Option<&[String]>) -> String {
        let parts: Vec<String> = self
            .probs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(a, p)| {
                let name = labels
                    .map(|l| l[a].clone())
                    .unwrap_or_else(|| format!("a{}", a + 1));
                if p == &Rational::from_integer(1.into()) {
                    name
                } else {
                    format!("{} {}", format_rational(p), name)
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Finite n-agent game in normal form. The payoff tensor is complete: one
/// rational per (agent, joint pure profile).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormGame {
    actions: ActionSpace,
    /// `payoff[agent][profile_index]`, row-major profile order.
    payoff: Vec<Vec<Rational>>,
}

impl NormalFormGame {
    /// Build from one flat per-agent payoff table in row-major profile order.
    pub fn from_tables(
        actions: ActionSpace,
        tables: Vec<Vec<Rational>>,
    ) -> Result<Self, GameError> {
        let n = actions.agents();
        if tables.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "payoff tables".into(),
                expected: n,
                got: tables.len(),
            });
        }
        let want = actions.num_profiles();
        for (i, t) in tables.iter().enumerate() {
            if t.len() != want {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {i} payoff table"),
                    expected: want,
                    got: t.len(),
                });
            }
        }
        Ok(NormalFormGame {
            actions,
            payoff: tables,
        })
    }

    /// Build by evaluating `f(agent, profile)` on the full tensor.
    pub fn from_fn(
        actions: ActionSpace,
        mut f: impl FnMut(usize, &[usize]) -> Rational,
    ) -> Self {
        let mut payoff = vec![Vec::with_capacity(actions.num_profiles()); actions.agents()];
        for profile in actions.profiles() {
            for (i, row) in payoff.iter_mut().enumerate() {
                row.push(f(i, &profile));
            }
        }
        NormalFormGame { actions, payoff }
    }

    pub fn actions(&self) -> &ActionSpace {
        &self.actions
    }

    pub fn agents(&self) -> usize {
        self.actions.agents()
    }

    pub fn payoff(&self, agent: usize, profile: &[usize]) -> Result<&Rational, GameError> {
        if agent >= self.agents() {
            return Err(GameError::AgentOutOfRange {
                agent,
                agents: self.agents(),
            });
        }
        let idx = self.actions.profile_index(profile)?;
        Ok(&self.payoff[agent][idx])
    }

    /// All agents' payoffs at a joint pure profile.
    pub fn pure_payoff(&self, profile: &[usize]) -> Result<Vec<Rational>, GameError> {
        let idx = self.actions.profile_index(profile)?;
        Ok(self.payoff.iter().map(|t| t[idx].clone()).collect())
    }

    /// Exact expected payoffs under a joint mixed profile:
    /// `sum_a (prod_i sigma_i(a_i)) * payoff(i, a)` per agent.
    pub fn mixed_payoff(&self, profile: &[MixedStrategy]) -> Result<Vec<Rational>, GameError> {
        self.check_profile_dims(profile)?;
        let mut out = vec![Rational::zero(); self.agents()];
        for (idx, pure) in self.actions.profiles().enumerate() {
            let mut w = Rational::from_integer(1.into());
            for (i, &a) in pure.iter().enumerate() {
                if profile[i].prob(a).is_zero() {
                    w = Rational::zero();
                    break;
                }
                w *= profile[i].prob(a);
            }
            if w.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                *acc += &w * &self.payoff[i][idx];
            }
        }
        Ok(out)
    }

    /// Agent `i`'s expected payoff from pure action `action` while everyone
    /// else plays their entry of `profile` (agent `i`'s own entry is ignored).
    pub fn action_payoff(
        &self,
        agent: usize,
        action: usize,
        profile: &[MixedStrategy],
    ) -> Result<Rational, GameError> {
        self.check_profile_dims(profile)?;
        if action >= self.actions.count(agent) {
            return Err(GameError::ActionOutOfRange {
                agent,
                action,
                count: self.actions.count(agent),
            });
        }
        let mut total = Rational::zero();
        for (idx, pure) in self.actions.profiles().enumerate() {
            if pure[agent] != action {
                continue;
            }
            let mut w = Rational::from_integer(1.into());
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
                total += w * &self.payoff[agent][idx];
            }
        }
        Ok(total)
    }

    /// Copy of the game with agent `agent`'s payoffs multiplied by `c`.
    pub fn scale_agent_payoffs(
        &self,
        agent: usize,
        c: &Rational,
    ) -> Result<NormalFormGame, GameError> {
        if agent >= self.agents() {
            return Err(GameError::AgentOutOfRange {
                agent,
                agents: self.agents(),
            });
        }
        let mut scaled = self.clone();
        for v in &mut scaled.payoff[agent] {
            *v *= c;
        }
        Ok(scaled)
    }

    fn check_profile_dims(&self, profile: &[MixedStrategy]) -> Result<(), GameError> {
        if profile.len() != self.agents() {
            return Err(GameError::DimensionMismatch {
                context: "mixed profile".into(),
                expected: self.agents(),
                got: profile.len(),
            });
        }
        for (i, s) in profile.iter().enumerate() {
            if s.len() != self.actions.count(i) {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {i} strategy"),
                    expected: self.actions.count(i),
                    got: s.len(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    #[test]
    fn market_m1_pure_payoff_matches_table() {
        let m1 = catalog::market(0);
        assert_eq!(m1.pure_payoff(&[0, 0]).unwrap(), vec![int(3), int(4)]);
        assert_eq!(m1.pure_payoff(&[2, 1]).unwrap(), vec![int(0), int(2)]);
    }

    #[test]
    fn single_action_game_has_unique_payoff() {
        let actions = ActionSpace::uniform(2, 1);
        let g = NormalFormGame::from_tables(actions, vec![vec![rat(7, 2)], vec![int(-1)]]).unwrap();
        assert_eq!(g.pure_payoff(&[0, 0]).unwrap(), vec![rat(7, 2), int(-1)]);
    }

    #[test]
    fn pd_pure_payoff() {
        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        // action order: C = 0, D = 1
        assert_eq!(pd.pure_payoff(&[1, 1]).unwrap(), vec![int(1), int(1)]);
        assert_eq!(pd.pure_payoff(&[1, 0]).unwrap(), vec![int(5), int(0)]);
    }

    #[test]
    fn out_of_range_action_is_an_input_error() {
        let m1 = catalog::market(0);
        assert!(matches!(
            m1.pure_payoff(&[3, 0]),
            Err(GameError::ActionOutOfRange { agent: 0, .. })
        ));
    }

    #[test]
    fn degenerate_mixture_reproduces_pure_payoff() {
        let m1 = catalog::market(0);
        for profile in m1.actions().profiles() {
            let mixed: Vec<MixedStrategy> = profile
                .iter()
                .enumerate()
                .map(|(i, &a)| MixedStrategy::pure(a, m1.actions().count(i)).unwrap())
                .collect();
            assert_eq!(
                m1.mixed_payoff(&mixed).unwrap(),
                m1.pure_payoff(&profile).unwrap()
            );
        }
    }

    #[test]
    fn pd_half_half_mixture() {
        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        let half = MixedStrategy::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let got = pd.mixed_payoff(&[half.clone(), half]).unwrap();
        // hand expansion of the four outcomes: (3+0+5+1)/4
        assert_eq!(got[0], rat(9, 4));
        assert_eq!(got[1], rat(9, 4));
    }

    #[test]
    fn uniform_mixture_on_m1_averages_all_entries() {
        let m1 = catalog::market(0);
        let u = MixedStrategy::new(vec![rat(1, 3); 3]).unwrap();
        let got = m1.mixed_payoff(&[u.clone(), u]).unwrap();
        // brute-force sum of the table, divided by 9
        let mut sums = [Rational::zero(), Rational::zero()];
        for profile in m1.actions().profiles() {
            let p = m1.pure_payoff(&profile).unwrap();
            sums[0] += &p[0];
            sums[1] += &p[1];
        }
        assert_eq!(got[0], &sums[0] / int(9));
        assert_eq!(got[1], &sums[1] / int(9));
        assert_eq!(got[0], rat(10, 3));
        assert_eq!(got[1], rat(23, 9));
    }

    #[test]
    fn mixture_dimension_mismatch_is_an_error() {
        let m1 = catalog::market(0);
        let short = MixedStrategy::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let u = MixedStrategy::new(vec![rat(1, 3); 3]).unwrap();
        assert!(matches!(
            m1.mixed_payoff(&[short, u]),
            Err(GameError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mixed_strategy_validation() {
        assert!(MixedStrategy::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(MixedStrategy::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
        let s = MixedStrategy::new(vec![rat(1, 4), rat(3, 4)]).unwrap();
        assert_eq!(s.support(), vec![0, 1]);
        assert_eq!(s.as_pure(), None);
        assert_eq!(MixedStrategy::pure(1, 2).unwrap().as_pure(), Some(1));
    }
}
