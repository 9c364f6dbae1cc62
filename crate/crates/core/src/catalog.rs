//! Bundled instances: the three-market competition, the PD double game, the
//! coordination double game, the two-branch trust instance, and a few small
//! games used across tests and the command-line examples.

use crate::error::GameError;
use crate::game::{ActionSpace, NormalFormGame};
use crate::multi::{MultiGame, TypeSpace};
use crate::rational::{int, rat, Rational};
use crate::regularity::{extend_witness, Witness};
use crate::simplex::SimplexPoint;
use crate::staged::{build_pd_dg, build_trust_dg, TrustStageGame};
use crate::transform::OwnTypeLinearGame;
use crate::bayes::{FiniteBayesianGame, StrategyMapProfile};
use crate::regularity::DoubleGameSpec;

const MARKET_TABLES: [[[(i64, i64); 3]; 3]; 3] = [
    [
        [(3, 4), (6, 3), (7, 1)],
        [(2, 5), (3, 2), (5, 3)],
        [(1, 3), (0, 2), (3, 0)],
    ],
    [
        [(0, 4), (0, 8), (1, 1)],
        [(6, 1), (4, 5), (7, 3)],
        [(0, 1), (1, 6), (1, 3)],
    ],
    [
        [(1, 0), (1, 2), (4, 5)],
        [(0, 1), (3, 2), (3, 4)],
        [(2, 4), (5, 3), (6, 7)],
    ],
];

fn market_actions() -> ActionSpace {
    ActionSpace::from_labels(vec![
        vec!["s1".into(), "s2".into(), "s3".into()],
        vec!["s1".into(), "s2".into(), "s3".into()],
    ])
    .expect("static labels")
}

/// Market `j` (0-based) of the three-market competition.
pub fn market(j: usize) -> NormalFormGame {
    let t = &MARKET_TABLES[j];
    NormalFormGame::from_fn(market_actions(), |agent, profile| {
        let (u1, u2) = t[profile[0]][profile[1]];
        int(if agent == 0 { u1 } else { u2 })
    })
}

/// The two-firm three-market multi-game.
pub fn markets_multigame() -> MultiGame {
    MultiGame::new(
        vec![market(0), market(1), market(2)],
        vec![TypeSpace::FullSimplex; 2],
    )
    .expect("static instance")
}

/// The diagonal witness: produce for market j when fully invested there.
pub fn markets_witness() -> Witness {
    Witness::pure(&markets_multigame(), &[vec![0, 1, 2], vec![0, 1, 2]]).expect("static instance")
}

/// The same markets, stored as own-type-linear coefficients `L_ii(a) =
/// (u_i1(a), u_i2(a), u_i3(a))`.
pub fn markets_own_type_linear() -> OwnTypeLinearGame {
    let actions = market_actions();
    let coeff = (0..2)
        .map(|i| {
            actions
                .profiles()
                .map(|profile| {
                    (0..3)
                        .map(|j| {
                            let (u1, u2) = MARKET_TABLES[j][profile[0]][profile[1]];
                            int(if i == 0 { u1 } else { u2 })
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    OwnTypeLinearGame::new(actions, 3, coeff, vec![vec![], vec![]]).expect("static instance")
}

/// Standard PD over actions (C, D) with row payoffs r/s/t/p.
pub fn prisoners_dilemma(t: i64, r: i64, p: i64, s: i64) -> NormalFormGame {
    let actions = ActionSpace::from_labels(vec![
        vec!["C".into(), "D".into()],
        vec!["C".into(), "D".into()],
    ])
    .expect("static labels");
    NormalFormGame::from_tables(
        actions,
        vec![
            vec![int(r), int(s), int(t), int(p)],
            vec![int(r), int(t), int(s), int(p)],
        ],
    )
    .expect("static instance")
}

/// The social companion game: cooperating pays y, defecting pays z,
/// regardless of the opponent.
pub fn social_game(y: i64, z: i64) -> NormalFormGame {
    let actions = ActionSpace::from_labels(vec![
        vec!["C".into(), "D".into()],
        vec!["C".into(), "D".into()],
    ])
    .expect("static labels");
    NormalFormGame::from_tables(
        actions,
        vec![
            vec![int(y), int(y), int(z), int(z)],
            vec![int(y), int(z), int(y), int(z)],
        ],
    )
    .expect("static instance")
}

/// The PD double game at the reference constants (5, 3, 1, 0; y = 2, z = 0).
pub fn pd_sg_multigame() -> MultiGame {
    build_pd_dg(int(5), int(3), int(1), int(0), int(2), int(0)).expect("reference constants")
}

/// Defect at the material vertex, cooperate at the social vertex.
pub fn pd_sg_witness() -> Witness {
    Witness::pure(&pd_sg_multigame(), &[vec![1, 0], vec![1, 0]]).expect("static instance")
}

/// PD double-game coefficients `L_ii(a) = (u_PD(a), u_SG(a))`.
pub fn pd_sg_own_type_linear(
    t: i64,
    r: i64,
    p: i64,
    s: i64,
    y: i64,
    z: i64,
) -> OwnTypeLinearGame {
    let mg = build_pd_dg(int(t), int(r), int(p), int(s), int(y), int(z))
        .expect("caller passes valid constants");
    let actions = mg.actions().clone();
    let coeff = (0..2)
        .map(|i| {
            actions
                .profiles()
                .map(|profile| {
                    (0..2)
                        .map(|j| mg.basic(j).payoff(i, &profile).expect("in range").clone())
                        .collect()
                })
                .collect()
        })
        .collect();
    OwnTypeLinearGame::new(actions, 2, coeff, vec![vec![], vec![]]).expect("static instance")
}

/// Coordination double game in the table layout where the first action pays
/// x (resp. z) regardless of the opponent: G1 rows (x,x),(x,0)/(0,x),(y,y),
/// G2 the same with z, w.
pub fn coordination_dg(x: i64, y: i64, z: i64, w: i64) -> MultiGame {
    let actions = ActionSpace::uniform(2, 2);
    let table = |hi: i64, lo: i64| -> NormalFormGame {
        NormalFormGame::from_tables(
            actions.clone(),
            vec![
                vec![int(hi), int(hi), int(0), int(lo)],
                vec![int(hi), int(0), int(hi), int(lo)],
            ],
        )
        .expect("static instance")
    };
    MultiGame::new(
        vec![table(x, y), table(z, w)],
        vec![TypeSpace::FullSimplex; 2],
    )
    .expect("static instance")
}

/// Coordination game with diagonal payoffs (x, x) and (y, y) and zeros off
/// the diagonal: two strict pure equilibria plus one mixed.
pub fn diagonal_coordination(x: i64, y: i64) -> NormalFormGame {
    let actions = ActionSpace::uniform(2, 2);
    NormalFormGame::from_tables(
        actions,
        vec![
            vec![int(x), int(0), int(0), int(y)],
            vec![int(x), int(0), int(0), int(y)],
        ],
    )
    .expect("static instance")
}

/// Matching pennies; unique equilibrium is the symmetric coin flip.
pub fn matching_pennies() -> NormalFormGame {
    let actions = ActionSpace::from_labels(vec![
        vec!["H".into(), "T".into()],
        vec!["H".into(), "T".into()],
    ])
    .expect("static labels");
    NormalFormGame::from_tables(
        actions,
        vec![
            vec![int(1), int(-1), int(-1), int(1)],
            vec![int(-1), int(1), int(1), int(-1)],
        ],
    )
    .expect("static instance")
}

/// A double game with no vertex witness at all: both basic games ask agent 1
/// to match agent 2, while agent 2's dominant action flips between the
/// games. The forced vertex strategies clash on the cross profiles.
pub fn conflicting_multigame() -> MultiGame {
    let actions = ActionSpace::uniform(2, 2);
    let matcher = |dominant: usize| -> NormalFormGame {
        NormalFormGame::from_fn(actions.clone(), |agent, profile| {
            if agent == 0 {
                int(if profile[0] == profile[1] { 1 } else { 0 })
            } else {
                int(if profile[1] == dominant { 1 } else { 0 })
            }
        })
    };
    MultiGame::new(
        vec![matcher(0), matcher(1)],
        vec![TypeSpace::FullSimplex; 2],
    )
    .expect("static instance")
}

/// Symmetric 2x2 game from the table parameters (a, b, c, d):
/// rows (a,a),(b,c)/(c,b),(d,d).
pub fn symmetric_game(a: Rational, b: Rational, c: Rational, d: Rational) -> NormalFormGame {
    NormalFormGame::from_tables(
        two_by_two_actions(),
        vec![
            vec![a.clone(), b.clone(), c.clone(), d.clone()],
            vec![a, c, b, d],
        ],
    )
    .expect("static shape")
}

pub fn two_by_two_actions() -> ActionSpace {
    ActionSpace::uniform(2, 2)
}

/// PD/SG rearranged into the symmetric condition-table layout with D as the
/// first action, so NE(G1) sits at (a1, a1) and NE(G2) at (a2, a2).
pub fn pd_sg_table_spec(t: i64, r: i64, p: i64, s: i64, y: i64, z: i64) -> DoubleGameSpec {
    let g1 = symmetric_game(int(p), int(t), int(s), int(r));
    let g2 = symmetric_game(int(z), int(z), int(y), int(y));
    DoubleGameSpec::new(g1, g2, true).expect("static shape")
}

/// Same games in the original (C, D) action order; NE(G1) is (a2, a2).
pub fn pd_sg_table_spec_cd_order(t: i64, r: i64, p: i64, s: i64, y: i64, z: i64) -> DoubleGameSpec {
    let g1 = symmetric_game(int(r), int(s), int(t), int(p));
    let g2 = symmetric_game(int(y), int(y), int(z), int(z));
    DoubleGameSpec::new(g1, g2, true).expect("static shape")
}

/// Per-agent type grids for a double game: scalars k/d encoded as
/// (1 - k/d, k/d). d = 1 is the vertex grid {0, 1}.
pub fn unit_interval_grid(d: i64) -> Vec<Vec<SimplexPoint>> {
    let points: Vec<SimplexPoint> = (0..=d)
        .map(|k| SimplexPoint::from_scalar(&rat(k, d)).expect("k <= d"))
        .collect();
    vec![points.clone(), points]
}

/// The two-agent trust instance: sender grid {0, 1}, sender type 1/4,
/// receiver types {0, 2/3}.
pub fn trust_reference_instance() -> TrustStageGame {
    build_trust_dg(vec![int(0), int(1)], rat(1, 4), vec![int(0), rat(2, 3)])
        .expect("reference constants")
}

/// Strategy maps obtained by evaluating the defect/cooperate witness on the
/// vertex type grid {0, 1} of the PD double game.
pub fn pd_sg_witness_maps(game: &FiniteBayesianGame) -> Result<StrategyMapProfile, GameError> {
    let w = pd_sg_witness();
    let grids = unit_interval_grid(1);
    let maps = grids
        .iter()
        .enumerate()
        .map(|(i, points)| points.iter().map(|p| extend_witness(&w, i, p)).collect())
        .collect();
    StrategyMapProfile::new(game, maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn market_tables_round_trip_the_reference_values() {
        assert_eq!(market(0).pure_payoff(&[0, 0]).unwrap(), vec![int(3), int(4)]);
        assert_eq!(market(1).pure_payoff(&[1, 1]).unwrap(), vec![int(4), int(5)]);
        assert_eq!(market(2).pure_payoff(&[2, 2]).unwrap(), vec![int(6), int(7)]);
    }

    #[test]
    fn pd_sg_table_spec_is_symmetric() {
        pd_sg_table_spec(5, 3, 1, 0, 2, 0);
        pd_sg_table_spec_cd_order(5, 3, 1, 0, 2, 0);
    }

    #[test]
    fn conflicting_instance_keeps_its_shape() {
        let mg = conflicting_multigame();
        assert_eq!(mg.dims(), 2);
        assert_eq!(mg.agents(), 2);
    }
}
