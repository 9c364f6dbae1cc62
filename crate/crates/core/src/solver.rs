//! Nash-equilibrium computation and verification for small finite games.
//! Everything is exact: equilibrium inequalities are rational comparisons
//! with no tolerance, and mixed equilibria come from exact linear solves of
//! support indifference systems.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::GameError;
use crate::game::{MixedStrategy, NormalFormGame};
use crate::rational::Rational;

/// One equilibrium: a joint mixed profile, flagged pure when every strategy
/// is a point mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashEquilibrium {
    pub strategies: Vec<MixedStrategy>,
    pub pure: bool,
}

impl NashEquilibrium {
    /// Supports of the profile, used for deterministic ordering.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.strategies.iter().map(MixedStrategy::support).collect()
    }
}

/// Result of an equilibrium enumeration. `degenerate_supports` lists support
/// pairs whose indifference system had a solution continuum; when nonempty
/// (or when `br_ties` is set) the enumeration is not known to be exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NEResult {
    pub equilibria: Vec<NashEquilibrium>,
    pub degenerate_supports: Vec<(Vec<usize>, Vec<usize>)>,
    /// Some found equilibrium has a best-response tie outside its support.
    pub br_ties: bool,
}

impl NEResult {
    /// True when the enumeration provably listed every equilibrium.
    pub fn fully_enumerated(&self) -> bool {
        self.degenerate_supports.is_empty() && !self.br_ties
    }

    pub fn pure_profiles(&self) -> Vec<Vec<usize>> {
        self.equilibria
            .iter()
            .filter(|e| e.pure)
            .map(|e| {
                e.strategies
                    .iter()
                    .map(|s| s.as_pure().expect("pure flag"))
                    .collect()
            })
            .collect()
    }
}

/// The set of agent `agent`'s pure actions maximizing expected payoff
/// against the opponents' entries of `profile` (the agent's own entry is
/// ignored). Never empty.
pub fn best_response_set(
    game: &NormalFormGame,
    agent: usize,
    profile: &[MixedStrategy],
) -> Result<Vec<usize>, GameError> {
    if agent >= game.agents() {
        return Err(GameError::AgentOutOfRange {
            agent,
            agents: game.agents(),
        });
    }
    let count = game.actions().count(agent);
    let payoffs: Vec<Rational> = (0..count)
        .map(|a| game.action_payoff(agent, a, profile))
        .collect::<Result<_, _>>()?;
    let best = payoffs.iter().max().expect("nonempty action set").clone();
    Ok((0..count).filter(|&a| payoffs[a] == best).collect())
}

/// Exact Nash check: every agent's strategy puts positive mass only on best
/// responses, equivalently no pure deviation profits.
pub fn is_nash(game: &NormalFormGame, profile: &[MixedStrategy]) -> Result<bool, GameError> {
    for agent in 0..game.agents() {
        let br = best_response_set(game, agent, profile)?;
        for a in profile[agent].support() {
            if !br.contains(&a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All joint pure profiles that are Nash equilibria, by full deviation scan.
/// Complete and exact; emitted in row-major profile order.
pub fn pure_ne_enumerate(game: &NormalFormGame) -> NEResult {
    let mut equilibria = Vec::new();
    for profile in game.actions().profiles() {
        let mixed: Vec<MixedStrategy> = profile
            .iter()
            .enumerate()
            .map(|(i, &a)| MixedStrategy::pure(a, game.actions().count(i)).expect("in range"))
            .collect();
        let ok = (0..game.agents()).all(|i| {
            best_response_set(game, i, &mixed)
                .expect("valid profile")
                .contains(&profile[i])
        });
        if ok {
            equilibria.push(NashEquilibrium {
                strategies: mixed,
                pure: true,
            });
        }
    }
    NEResult {
        equilibria,
        ..NEResult::default()
    }
}

/// Outcome of an exact linear solve.
enum LinearSolve {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Gaussian elimination over the rationals on `a x = b`. Exact; singular
/// systems are reported, never guessed.
fn solve_linear(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> LinearSolve {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for c in col..=cols {
            m[row][c] = &m[row][c] / &pivot;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    for r in row..rows {
        if !m[r][cols].is_zero() {
            return LinearSolve::Inconsistent;
        }
    }
    if pivot_cols.len() < cols {
        return LinearSolve::Underdetermined;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    LinearSolve::Unique(x)
}

/// Solve for the opponent's strategy on `opp_support` that makes agent
/// `agent`'s payoffs equal across `own_support`, in a 2-agent game.
fn solve_indifference(
    game: &NormalFormGame,
    agent: usize,
    own_support: &[usize],
    opp_support: &[usize],
) -> LinearSolve {
    let k = opp_support.len();
    let pay = |own: usize, opp: usize| -> Rational {
        let profile = if agent == 0 { [own, opp] } else { [opp, own] };
        game.payoff(agent, &profile).expect("in range").clone()
    };
    // rows: indifference between own_support[0] and own_support[t] (t >= 1),
    // then the normalization row
    let mut a = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    for t in 1..own_support.len() {
        let row: Vec<Rational> = opp_support
            .iter()
            .map(|&opp| pay(own_support[0], opp) - pay(own_support[t], opp))
            .collect();
        a.push(row);
        b.push(Rational::zero());
    }
    a.push(vec![Rational::one(); k]);
    b.push(Rational::one());
    solve_linear(a, b)
}

/// All Nash equilibria of a 2-agent game on nondegenerate supports, by
/// equal-size support-pair enumeration with exact indifference solves.
/// Includes pure equilibria; support pairs whose system is singular with a
/// solution continuum are flagged rather than enumerated. Output is sorted
/// lexicographically by supports.
pub fn support_enumeration_2p(game: &NormalFormGame) -> Result<NEResult, GameError> {
    if game.agents() != 2 {
        return Err(GameError::DimensionMismatch {
            context: "support enumeration".into(),
            expected: 2,
            got: game.agents(),
        });
    }
    let c1 = game.actions().count(0);
    let c2 = game.actions().count(1);
    let mut result = NEResult::default();
    for k in 1..=c1.min(c2) {
        for s1 in (0..c1).combinations(k) {
            for s2 in (0..c2).combinations(k) {
                // agent 1's indifference pins sigma_2, agent 2's pins sigma_1
                let sigma2 = match solve_indifference(game, 0, &s1, &s2) {
                    LinearSolve::Unique(x) => x,
                    LinearSolve::Inconsistent => continue,
                    LinearSolve::Underdetermined => {
                        result.degenerate_supports.push((s1.clone(), s2.clone()));
                        continue;
                    }
                };
                let sigma1 = match solve_indifference(game, 1, &s2, &s1) {
                    LinearSolve::Unique(x) => x,
                    LinearSolve::Inconsistent => continue,
                    LinearSolve::Underdetermined => {
                        result.degenerate_supports.push((s1.clone(), s2.clone()));
                        continue;
                    }
                };
                // the support must carry strictly positive mass; zero mass
                // means the same equilibrium lives on a smaller support
                if sigma1.iter().any(|p| p <= &Rational::zero())
                    || sigma2.iter().any(|p| p <= &Rational::zero())
                {
                    continue;
                }
                let full1 = embed(&sigma1, &s1, c1);
                let full2 = embed(&sigma2, &s2, c2);
                let profile = vec![full1, full2];
                // best-response optimality outside the supports
                let mut ok = true;
                let mut tie = false;
                for (agent, support) in [(0usize, &s1), (1usize, &s2)] {
                    let count = game.actions().count(agent);
                    let on_support = game.action_payoff(agent, support[0], &profile)?;
                    for a in 0..count {
                        if support.contains(&a) {
                            continue;
                        }
                        let off = game.action_payoff(agent, a, &profile)?;
                        if off > on_support {
                            ok = false;
                            break;
                        }
                        if off == on_support {
                            tie = true;
                        }
                    }
                    if !ok {
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                if tie {
                    result.br_ties = true;
                }
                result.equilibria.push(NashEquilibrium {
                    pure: k == 1,
                    strategies: profile,
                });
            }
        }
    }
    result
        .equilibria
        .sort_by(|a, b| a.supports().cmp(&b.supports()).then(a.strategies.cmp(&b.strategies)));
    result.degenerate_supports.sort();
    Ok(result)
}

fn embed(probs: &[Rational], support: &[usize], count: usize) -> MixedStrategy {
    let mut full = vec![Rational::zero(); count];
    for (p, &a) in probs.iter().zip(support) {
        full[a] = p.clone();
    }
    MixedStrategy::new(full).expect("solved distribution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::game::ActionSpace;
    use crate::rational::{int, rat};

    fn pure(prof: &[usize], counts: &[usize]) -> Vec<MixedStrategy> {
        prof.iter()
            .zip(counts)
            .map(|(&a, &c)| MixedStrategy::pure(a, c).unwrap())
            .collect()
    }

    #[test]
    fn m1_row_best_response_to_s1_is_s1() {
        let m1 = catalog::market(0);
        let profile = pure(&[0, 0], &[3, 3]);
        // column payoffs 3, 2, 1
        assert_eq!(best_response_set(&m1, 0, &profile).unwrap(), vec![0]);
    }

    #[test]
    fn constant_game_has_all_best_responses() {
        let g = NormalFormGame::from_fn(ActionSpace::uniform(2, 3), |_, _| int(7));
        let profile = pure(&[1, 2], &[3, 3]);
        assert_eq!(best_response_set(&g, 0, &profile).unwrap(), vec![0, 1, 2]);
        assert_eq!(best_response_set(&g, 1, &profile).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn pd_defect_dominates_any_mixture() {
        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        for q in [rat(0, 1), rat(1, 3), rat(2, 3), rat(1, 1)] {
            let opp = MixedStrategy::new(vec![q.clone(), int(1) - &q]).unwrap();
            let profile = vec![opp.clone(), opp];
            // D is index 1; strict dominance makes it the unique BR
            assert_eq!(best_response_set(&pd, 0, &profile).unwrap(), vec![1]);
        }
    }

    #[test]
    fn pd_nash_verdicts() {
        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        assert!(is_nash(&pd, &pure(&[1, 1], &[2, 2])).unwrap());
        assert!(!is_nash(&pd, &pure(&[0, 0], &[2, 2])).unwrap());
    }

    #[test]
    fn sg_cooperate_is_nash() {
        let sg = catalog::social_game(2, 0);
        assert!(is_nash(&sg, &pure(&[0, 0], &[2, 2])).unwrap());
    }

    #[test]
    fn matching_pennies_mixed_nash() {
        let mp = catalog::matching_pennies();
        let half = MixedStrategy::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(is_nash(&mp, &[half.clone(), half]).unwrap());
        assert!(!is_nash(&mp, &pure(&[0, 0], &[2, 2])).unwrap());
    }

    #[test]
    fn pure_enumeration_on_catalog_games() {
        let m2 = catalog::market(1);
        assert!(pure_ne_enumerate(&m2).pure_profiles().contains(&vec![1, 1]));
        let m3 = catalog::market(2);
        let nes = pure_ne_enumerate(&m3);
        assert!(nes.pure_profiles().contains(&vec![2, 2]));
        assert_eq!(m3.pure_payoff(&[2, 2]).unwrap(), vec![int(6), int(7)]);

        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        assert_eq!(pure_ne_enumerate(&pd).pure_profiles(), vec![vec![1, 1]]);

        let zero = NormalFormGame::from_fn(ActionSpace::uniform(2, 2), |_, _| int(0));
        assert_eq!(pure_ne_enumerate(&zero).equilibria.len(), 4);
    }

    #[test]
    fn support_enumeration_matching_pennies() {
        let mp = catalog::matching_pennies();
        let result = support_enumeration_2p(&mp).unwrap();
        assert_eq!(result.equilibria.len(), 1);
        let ne = &result.equilibria[0];
        assert!(!ne.pure);
        let half = MixedStrategy::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(ne.strategies, vec![half.clone(), half]);
        assert!(result.fully_enumerated());
    }

    #[test]
    fn support_enumeration_pd_finds_only_defection() {
        let pd = catalog::prisoners_dilemma(5, 3, 1, 0);
        let result = support_enumeration_2p(&pd).unwrap();
        assert_eq!(result.equilibria.len(), 1);
        assert_eq!(result.pure_profiles(), vec![vec![1, 1]]);
    }

    #[test]
    fn support_enumeration_standard_coordination() {
        // diagonal coordination payoffs 2 / 1: two pure equilibria plus the
        // mixed one solved by hand from the indifference equations
        // (2q = 1 - q gives q = 1/3)
        let g = catalog::diagonal_coordination(2, 1);
        let result = support_enumeration_2p(&g).unwrap();
        assert_eq!(result.equilibria.len(), 3);
        assert_eq!(
            result.pure_profiles(),
            vec![vec![0, 0], vec![1, 1]]
        );
        let mixed = result.equilibria.iter().find(|e| !e.pure).unwrap();
        let expect = MixedStrategy::new(vec![rat(1, 3), rat(2, 3)]).unwrap();
        assert_eq!(mixed.strategies, vec![expect.clone(), expect]);
    }

    #[test]
    fn shared_offdiagonal_coordination_has_dominant_first_action() {
        // the coordination layout with x = 2, y = 1 pays the first action x
        // regardless of the opponent, so (a1, a1) is the unique equilibrium
        let mg = catalog::coordination_dg(2, 1, 2, 1);
        let g1 = mg.basic(0);
        let result = support_enumeration_2p(g1).unwrap();
        assert_eq!(result.pure_profiles(), vec![vec![0, 0]]);
        assert_eq!(result.equilibria.len(), 1);
    }

    #[test]
    fn all_enumerated_profiles_pass_is_nash() {
        let games = [
            catalog::market(0),
            catalog::market(1),
            catalog::market(2),
            catalog::matching_pennies(),
            catalog::diagonal_coordination(2, 1),
        ];
        for g in &games {
            for ne in support_enumeration_2p(g).unwrap().equilibria {
                assert!(is_nash(g, &ne.strategies).unwrap());
            }
            for ne in pure_ne_enumerate(g).equilibria {
                assert!(is_nash(g, &ne.strategies).unwrap());
            }
        }
    }

    #[test]
    fn degenerate_tie_game_is_flagged_not_crashed() {
        // PD/SG local game at theta = 1/3 has u1(C,D) = u1(D,D): the
        // continuum of equilibria shows up as best-response ties
        let g = NormalFormGame::from_tables(
            ActionSpace::uniform(2, 2),
            vec![
                vec![rat(8, 3), rat(2, 3), rat(10, 3), rat(2, 3)],
                vec![rat(8, 3), rat(10, 3), rat(2, 3), rat(2, 3)],
            ],
        )
        .unwrap();
        let result = support_enumeration_2p(&g).unwrap();
        assert_eq!(result.pure_profiles(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(!result.fully_enumerated());
    }

    #[test]
    fn fully_tied_game_reports_degenerate_supports() {
        let g = NormalFormGame::from_fn(ActionSpace::uniform(2, 2), |_, _| int(0));
        let result = support_enumeration_2p(&g).unwrap();
        assert!(!result.degenerate_supports.is_empty());
    }

    #[test]
    fn is_nash_invariant_under_positive_rescaling() {
        let g = catalog::market(0);
        let scaled = g.scale_agent_payoffs(0, &rat(7, 3)).unwrap();
        for profile in g.actions().profiles() {
            let mixed = pure(&profile, &[3, 3]);
            assert_eq!(
                is_nash(&g, &mixed).unwrap(),
                is_nash(&scaled, &mixed).unwrap()
            );
        }
    }
}
