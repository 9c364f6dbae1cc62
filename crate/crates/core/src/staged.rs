//! Two-stage double games: the trust game blended with its conscience
//! companion, backward induction over the finite tree, the belief-threshold
//! equilibrium of the sender, and the one-shot PD double-game builder.
//!
//! Stage game: the sender sends `y` from a finite grid in [0, 1]; the
//! receiver returns `x` with `0 <= x <= 3y`. Material utilities are
//! `u1 = x - y`, `u2 = 3y - x`; social utilities are `u12 = y`,
//! `u22 = x - 2y`. Each agent's combined utility is the barycentric blend
//! `(1 - theta) * material + theta * social` of its prosocial type.

use num_traits::{Signed, Zero};

use crate::error::GameError;
use crate::game::{ActionSpace, NormalFormGame};
use crate::multi::{MultiGame, TypeSpace};
use crate::rational::{format_rational, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrustStageGame {
    sender_grid: Vec<Rational>,
    theta1: Rational,
    theta2: Vec<Rational>,
    receiver_step: Rational,
}

/// Stage game with the reference action discretization: receiver actions are
/// step multiples `{0, step, 2*step, ...}` capped at `3y` (step 1 reproduces
/// the receiver sets {0} and {0,1,2,3} of the two-branch tree).
pub fn build_trust_dg(
    sender_grid: Vec<Rational>,
    theta1: Rational,
    theta2: Vec<Rational>,
) -> Result<TrustStageGame, GameError> {
    TrustStageGame::new(sender_grid, theta1, theta2, int(1))
}

impl TrustStageGame {
    pub fn new(
        mut sender_grid: Vec<Rational>,
        theta1: Rational,
        theta2: Vec<Rational>,
        receiver_step: Rational,
    ) -> Result<Self, GameError> {
        if sender_grid.is_empty() {
            return Err(GameError::InvalidGame("empty sender grid".into()));
        }
        sender_grid.sort();
        sender_grid.dedup();
        for y in &sender_grid {
            if y < &Rational::zero() || y > &int(1) {
                return Err(GameError::Precondition(
                    "0 <= y <= 1".into(),
                    format!(" (y={})", format_rational(y)),
                ));
            }
        }
        for t in theta2.iter().chain(std::iter::once(&theta1)) {
            if t < &Rational::zero() || t > &int(1) {
                return Err(GameError::Precondition(
                    "0 <= theta <= 1".into(),
                    format!(" (theta={})", format_rational(t)),
                ));
            }
        }
        if theta2.is_empty() {
            return Err(GameError::InvalidGame("empty receiver type set".into()));
        }
        if !receiver_step.is_positive() {
            return Err(GameError::Precondition(
                "receiver step > 0".into(),
                format!(" (step={})", format_rational(&receiver_step)),
            ));
        }
        let mut theta2 = theta2;
        theta2.sort();
        theta2.dedup();
        Ok(TrustStageGame {
            sender_grid,
            theta1,
            theta2,
            receiver_step,
        })
    }

    pub fn sender_grid(&self) -> &[Rational] {
        &self.sender_grid
    }

    pub fn theta1(&self) -> &Rational {
        &self.theta1
    }

    pub fn theta2(&self) -> &[Rational] {
        &self.theta2
    }

    pub fn receiver_step(&self) -> &Rational {
        &self.receiver_step
    }

    /// Feasible returns at the stage-2 node `y`: step multiples in [0, 3y].
    pub fn receiver_actions(&self, y: &Rational) -> Vec<Rational> {
        let cap = y * int(3);
        let mut out = Vec::new();
        let mut x = Rational::zero();
        while x <= cap {
            out.push(x.clone());
            x += &self.receiver_step;
        }
        out
    }

    pub fn material_utilities(y: &Rational, x: &Rational) -> (Rational, Rational) {
        (x - y, y * int(3) - x)
    }

    pub fn social_utilities(y: &Rational, x: &Rational) -> (Rational, Rational) {
        (y.clone(), x - y * int(2))
    }

    /// Sender's combined utility at its own type.
    pub fn combined_sender_utility(&self, y: &Rational, x: &Rational) -> Rational {
        let (material, _) = Self::material_utilities(y, x);
        let (social, _) = Self::social_utilities(y, x);
        (int(1) - &self.theta1) * material + &self.theta1 * social
    }

    /// Receiver's combined utility at a given receiver type.
    pub fn combined_receiver_utility(
        &self,
        y: &Rational,
        x: &Rational,
        theta2: &Rational,
    ) -> Rational {
        let (_, material) = Self::material_utilities(y, x);
        let (_, social) = Self::social_utilities(y, x);
        (int(1) - theta2) * material + theta2 * social
    }
}

/// Exact argmax over feasible returns of the receiver's combined utility at
/// node `(y, theta2)`. The utility is linear in x, so this is the top of the
/// grid, the bottom, or everything on a tie.
pub fn receiver_best_reply(
    g: &TrustStageGame,
    y: &Rational,
    theta2: &Rational,
) -> Result<Vec<Rational>, GameError> {
    if !g.sender_grid.contains(y) {
        return Err(GameError::InvalidGame(format!(
            "y = {} is not on the sender grid",
            format_rational(y)
        )));
    }
    let actions = g.receiver_actions(y);
    let utilities: Vec<Rational> = actions
        .iter()
        .map(|x| g.combined_receiver_utility(y, x, theta2))
        .collect();
    let best = utilities.iter().max().expect("nonempty").clone();
    Ok(actions
        .into_iter()
        .zip(utilities)
        .filter(|(_, u)| u == &best)
        .map(|(x, _)| x)
        .collect())
}

/// Receiver policy at one tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceiverNode {
    pub y: Rational,
    pub theta2: Rational,
    pub best: Vec<Rational>,
}

/// Subgame-perfect outcome for a two-branch instance at one belief.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeResult {
    /// Exact argmax per (y, theta2) node.
    pub receiver_policy: Vec<ReceiverNode>,
    /// All optimal sender amounts (set-valued at exact indifference).
    pub sender_optimal: Vec<Rational>,
    /// The sender's optimal expected combined utility.
    pub sender_value: Rational,
    /// Belief making the sender exactly indifferent, when one exists.
    pub threshold: Option<Rational>,
}

/// The two receiver branches of a reference-shaped instance: the selfish type
/// returns 0, the prosocial type returns 3y. Errors when the instance does
/// not have that shape (two types with those unique best replies).
fn two_branch_shape(g: &TrustStageGame) -> Result<(Rational, Rational), GameError> {
    if g.theta2.len() != 2 {
        return Err(GameError::InvalidGame(format!(
            "belief analysis needs exactly two receiver types, got {}",
            g.theta2.len()
        )));
    }
    let low = g.theta2[0].clone();
    let high = g.theta2[1].clone();
    for y in &g.sender_grid {
        if y.is_zero() {
            continue;
        }
        let low_reply = receiver_best_reply(g, y, &low)?;
        if low_reply != vec![Rational::zero()] {
            return Err(GameError::InvalidGame(
                "the low receiver type must uniquely return 0".into(),
            ));
        }
        let high_reply = receiver_best_reply(g, y, &high)?;
        if high_reply != vec![y * int(3)] {
            return Err(GameError::InvalidGame(
                "the high receiver type must uniquely return 3y".into(),
            ));
        }
    }
    Ok((low, high))
}

/// Backward induction at belief `p0`, the conditional mass the sender puts
/// on the receiver's *selfish* type (the branch returning 0). The sender
/// maximizes `p0 * u1(y, 0) + (1 - p0) * u1(y, 3y)` over its grid; at exact
/// indifference every grid amount is returned.
pub fn spe_with_belief(g: &TrustStageGame, p0: &Rational) -> Result<SpeResult, GameError> {
    if p0 < &Rational::zero() || p0 > &int(1) {
        return Err(GameError::Precondition(
            "0 <= p0 <= 1".into(),
            format!(" (p0={})", format_rational(p0)),
        ));
    }
    let (low, high) = two_branch_shape(g)?;

    let mut receiver_policy = Vec::new();
    for y in &g.sender_grid {
        for theta2 in [&low, &high] {
            receiver_policy.push(ReceiverNode {
                y: y.clone(),
                theta2: theta2.clone(),
                best: receiver_best_reply(g, y, theta2)?,
            });
        }
    }

    let value_of = |y: &Rational| -> Rational {
        let selfish = g.combined_sender_utility(y, &Rational::zero());
        let social = g.combined_sender_utility(y, &(y * int(3)));
        p0 * selfish + (int(1) - p0) * social
    };
    let values: Vec<Rational> = g.sender_grid.iter().map(value_of).collect();
    let best = values.iter().max().expect("nonempty grid").clone();
    let sender_optimal: Vec<Rational> = g
        .sender_grid
        .iter()
        .zip(&values)
        .filter(|(_, v)| *v == &best)
        .map(|(y, _)| y.clone())
        .collect();

    Ok(SpeResult {
        receiver_policy,
        sender_optimal,
        sender_value: best,
        threshold: sender_threshold(g)?,
    })
}

/// The belief in the selfish type that makes the sender's expected combined
/// utility identically zero in y, solved symbolically from the two branch
/// coefficients `u1(y, 0) = (2*theta1 - 1) y` and `u1(y, 3y) = (2 - theta1) y`.
/// `None` when both branches are nonnegative (no sign change: the sender
/// always sends).
pub fn sender_threshold(g: &TrustStageGame) -> Result<Option<Rational>, GameError> {
    two_branch_shape(g)?;
    let beta_selfish = &g.theta1 * int(2) - int(1);
    let beta_social = int(2) - &g.theta1;
    if beta_selfish > Rational::zero() {
        return Ok(None);
    }
    Ok(Some(&beta_social / (&beta_social - &beta_selfish)))
}

/// The PD double game: basic games PD and its social companion over actions
/// (C, D), under the standard orderings `t > r > p > s`, `r > (t + s)/2`
/// and `y > z = s`. Violations are reported by the named inequality.
pub fn build_pd_dg(
    t: Rational,
    r: Rational,
    p: Rational,
    s: Rational,
    y: Rational,
    z: Rational,
) -> Result<MultiGame, GameError> {
    let detail = |pairs: &[(&str, &Rational)]| {
        let parts: Vec<String> = pairs
            .iter()
            .map(|(n, v)| format!("{n}={}", format_rational(v)))
            .collect();
        format!("({})", parts.join(", "))
    };
    if t <= r {
        return Err(GameError::precondition("t > r", detail(&[("t", &t), ("r", &r)])));
    }
    if r <= p {
        return Err(GameError::precondition("r > p", detail(&[("r", &r), ("p", &p)])));
    }
    if p <= s {
        return Err(GameError::precondition("p > s", detail(&[("p", &p), ("s", &s)])));
    }
    let half_ts = (&t + &s) / int(2);
    if r <= half_ts {
        return Err(GameError::precondition(
            "r > (t+s)/2",
            detail(&[("r", &r), ("(t+s)/2", &half_ts)]),
        ));
    }
    if y <= z {
        return Err(GameError::precondition("y > z", detail(&[("y", &y), ("z", &z)])));
    }
    if z != s {
        return Err(GameError::precondition("z = s", detail(&[("z", &z), ("s", &s)])));
    }

    let actions = ActionSpace::from_labels(vec![
        vec!["C".into(), "D".into()],
        vec!["C".into(), "D".into()],
    ])?;
    let pd = NormalFormGame::from_tables(
        actions.clone(),
        vec![
            vec![r.clone(), s.clone(), t.clone(), p.clone()],
            vec![r.clone(), t.clone(), s.clone(), p.clone()],
        ],
    )?;
    let sg = NormalFormGame::from_tables(
        actions,
        vec![
            vec![y.clone(), y.clone(), z.clone(), z.clone()],
            vec![y.clone(), z.clone(), y.clone(), z.clone()],
        ],
    )?;
    MultiGame::new(vec![pd, sg], vec![TypeSpace::FullSimplex; 2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;
    use crate::regularity::{vertex_regularity_search, RegularityStatus};

    #[test]
    fn figure_one_tree_payoffs() {
        let g = catalog::trust_reference_instance();
        assert_eq!(g.receiver_actions(&int(0)), vec![int(0)]);
        assert_eq!(
            g.receiver_actions(&int(1)),
            vec![int(0), int(1), int(2), int(3)]
        );
        // material leaves after y = 1: (-1,3), (0,2), (1,1), (2,0)
        let material: Vec<(Rational, Rational)> = g
            .receiver_actions(&int(1))
            .iter()
            .map(|x| TrustStageGame::material_utilities(&int(1), x))
            .collect();
        assert_eq!(
            material,
            vec![
                (int(-1), int(3)),
                (int(0), int(2)),
                (int(1), int(1)),
                (int(2), int(0))
            ]
        );
        // social leaves after y = 1: (1,-2), (1,-1), (1,0), (1,1)
        let social: Vec<(Rational, Rational)> = g
            .receiver_actions(&int(1))
            .iter()
            .map(|x| TrustStageGame::social_utilities(&int(1), x))
            .collect();
        assert_eq!(
            social,
            vec![
                (int(1), int(-2)),
                (int(1), int(-1)),
                (int(1), int(0)),
                (int(1), int(1))
            ]
        );
    }

    #[test]
    fn combined_utilities_match_the_reference_formulas() {
        // u1(y, x, 1/4) = 3x/4 - y/2 and u2(y, x, 2/3) = x/3 - y/3
        let g = catalog::trust_reference_instance();
        for y in [int(0), int(1)] {
            for x in g.receiver_actions(&y) {
                assert_eq!(
                    g.combined_sender_utility(&y, &x),
                    rat(3, 4) * &x - rat(1, 2) * &y
                );
                assert_eq!(
                    g.combined_receiver_utility(&y, &x, &rat(2, 3)),
                    (&x - &y) / int(3)
                );
            }
        }
    }

    #[test]
    fn blend_is_exactly_barycentric_at_every_node() {
        let g = TrustStageGame::new(
            vec![int(0), rat(1, 2), int(1)],
            rat(2, 5),
            vec![rat(1, 5), rat(4, 5)],
            rat(1, 2),
        )
        .unwrap();
        for y in g.sender_grid().to_vec() {
            for x in g.receiver_actions(&y) {
                let (m1, m2) = TrustStageGame::material_utilities(&y, &x);
                let (s1, s2) = TrustStageGame::social_utilities(&y, &x);
                assert_eq!(
                    g.combined_sender_utility(&y, &x),
                    (int(1) - rat(2, 5)) * m1 + rat(2, 5) * s1
                );
                let t2 = rat(4, 5);
                assert_eq!(
                    g.combined_receiver_utility(&y, &x, &t2),
                    (int(1) - &t2) * m2 + &t2 * s2
                );
            }
        }
    }

    #[test]
    fn receiver_replies_match_the_worked_example() {
        let g = catalog::trust_reference_instance();
        assert_eq!(
            receiver_best_reply(&g, &int(1), &rat(2, 3)).unwrap(),
            vec![int(3)]
        );
        assert_eq!(
            receiver_best_reply(&g, &int(1), &int(0)).unwrap(),
            vec![int(0)]
        );
        // the y = 0 node has a single feasible action
        assert_eq!(
            receiver_best_reply(&g, &int(0), &rat(2, 3)).unwrap(),
            vec![int(0)]
        );
    }

    #[test]
    fn sender_switches_at_seven_ninths() {
        let g = catalog::trust_reference_instance();
        let below = spe_with_belief(&g, &rat(1, 2)).unwrap();
        assert_eq!(below.sender_optimal, vec![int(1)]);
        assert_eq!(below.sender_value, rat(5, 8));
        let above = spe_with_belief(&g, &rat(8, 9)).unwrap();
        assert_eq!(above.sender_optimal, vec![int(0)]);
        let at = spe_with_belief(&g, &rat(7, 9)).unwrap();
        assert_eq!(at.sender_optimal, vec![int(0), int(1)]);
        assert_eq!(at.sender_value, int(0));
        assert_eq!(at.threshold, Some(rat(7, 9)));
    }

    #[test]
    fn pure_material_instance_yields_zero_zero() {
        let g = build_trust_dg(vec![int(0), int(1)], int(0), vec![int(0), rat(2, 3)]).unwrap();
        // selfish sender against any belief mix still prefers 0 once the
        // belief in the selfish receiver passes 2/3
        assert_eq!(sender_threshold(&g).unwrap(), Some(rat(2, 3)));
        let res = spe_with_belief(&g, &int(1)).unwrap();
        assert_eq!(res.sender_optimal, vec![int(0)]);
        assert_eq!(res.sender_value, int(0));
    }

    #[test]
    fn fully_prosocial_pair_reaches_one_three() {
        // theta1 = theta2 = 1: the receiver returns 3y and the sender sends
        // everything, so play ends at (y, x) = (1, 3)
        let g = TrustStageGame::new(
            vec![int(0), int(1)],
            int(1),
            vec![int(0), int(1)],
            int(1),
        )
        .unwrap();
        assert_eq!(receiver_best_reply(&g, &int(1), &int(1)).unwrap(), vec![int(3)]);
        let res = spe_with_belief(&g, &int(0)).unwrap();
        assert_eq!(res.sender_optimal, vec![int(1)]);
        assert_eq!(res.sender_value, int(1));
    }

    #[test]
    fn prosocial_sender_always_sends() {
        // theta1 >= 1/2 makes both branches nonnegative: no sign change
        let g = build_trust_dg(vec![int(0), int(1)], rat(3, 4), vec![int(0), rat(2, 3)]).unwrap();
        assert_eq!(sender_threshold(&g).unwrap(), None);
        let res = spe_with_belief(&g, &int(1)).unwrap();
        assert_eq!(res.sender_optimal, vec![int(1)]);
    }

    #[test]
    fn sender_policy_is_monotone_in_the_belief() {
        let g = catalog::trust_reference_instance();
        let mut last_max: Option<Rational> = None;
        for k in 0..=9 {
            let p0 = rat(k, 9);
            let res = spe_with_belief(&g, &p0).unwrap();
            let top = res.sender_optimal.iter().max().unwrap().clone();
            if let Some(prev) = last_max {
                assert!(top <= prev, "optimal amount must weakly decrease in p0");
            }
            last_max = Some(top);
        }
    }

    #[test]
    fn backward_induction_is_subgame_perfect() {
        let g = catalog::trust_reference_instance();
        let p0 = rat(1, 3);
        let res = spe_with_belief(&g, &p0).unwrap();
        // receiver nodes: the chosen action maximizes over the feasible set
        for node in &res.receiver_policy {
            let best = receiver_best_reply(&g, &node.y, &node.theta2).unwrap();
            assert_eq!(node.best, best);
            let chosen = g.combined_receiver_utility(&node.y, &best[0], &node.theta2);
            for x in g.receiver_actions(&node.y) {
                assert!(g.combined_receiver_utility(&node.y, &x, &node.theta2) <= chosen);
            }
        }
        // sender node: one-shot deviations to any other grid amount
        for y in g.sender_grid() {
            let eu = &p0 * g.combined_sender_utility(y, &int(0))
                + (int(1) - &p0) * g.combined_sender_utility(y, &(y * int(3)));
            assert!(eu <= res.sender_value);
        }
    }

    #[test]
    fn threshold_agrees_with_the_policy_switch() {
        let g = catalog::trust_reference_instance();
        let threshold = sender_threshold(&g).unwrap().unwrap();
        let eps = rat(1, 1000);
        let below = spe_with_belief(&g, &(&threshold - &eps)).unwrap();
        assert_eq!(below.sender_optimal, vec![int(1)]);
        let above = spe_with_belief(&g, &(&threshold + &eps)).unwrap();
        assert_eq!(above.sender_optimal, vec![int(0)]);
    }

    #[test]
    fn finer_grids_keep_the_same_threshold() {
        let grid: Vec<Rational> = (0..=4).map(|k| rat(k, 4)).collect();
        let g = TrustStageGame::new(grid, rat(1, 4), vec![int(0), rat(2, 3)], rat(1, 4)).unwrap();
        assert_eq!(sender_threshold(&g).unwrap(), Some(rat(7, 9)));
        let at = spe_with_belief(&g, &rat(7, 9)).unwrap();
        // expected utility is identically zero, so the whole grid ties
        assert_eq!(at.sender_optimal.len(), 5);
    }

    #[test]
    fn pd_dg_builder_validates_the_orderings() {
        assert!(build_pd_dg(int(5), int(3), int(1), int(0), int(2), int(0)).is_ok());
        let err = build_pd_dg(int(5), int(3), int(1), int(0), int(0), int(0)).unwrap_err();
        assert!(err.to_string().contains("y > z"));
        let err = build_pd_dg(int(3), int(5), int(1), int(0), int(2), int(0)).unwrap_err();
        assert!(err.to_string().contains("t > r"));
        let err = build_pd_dg(int(5), int(3), int(1), int(0), int(2), int(1)).unwrap_err();
        assert!(err.to_string().contains("z = s"));
        // r must beat alternating exploitation
        let err = build_pd_dg(int(7), int(3), int(1), int(0), int(2), int(0)).unwrap_err();
        assert!(err.to_string().contains("r > (t+s)/2"));
    }

    #[test]
    fn pd_dg_vertex_regularity_is_certified() {
        let mg = build_pd_dg(int(5), int(3), int(1), int(0), int(2), int(0)).unwrap();
        let report = vertex_regularity_search(&mg);
        assert_eq!(report.status, RegularityStatus::Certified);
    }

    #[test]
    fn trust_game_rejects_bad_grids() {
        assert!(build_trust_dg(vec![int(2)], rat(1, 4), vec![int(0)]).is_err());
        assert!(build_trust_dg(vec![int(0)], rat(5, 4), vec![int(0)]).is_err());
        assert!(build_trust_dg(vec![], rat(1, 4), vec![int(0)]).is_err());
    }
}
