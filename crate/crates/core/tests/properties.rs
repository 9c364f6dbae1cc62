//! Property tests for the exact-arithmetic invariants: multilinearity,
//! own-type dependence, blend exactness, point-mass equivalence, argmax
//! invariance under positive rescaling, and enumeration cross-checks.

use multigame::bayes::{is_bne, Prior, StrategyMapProfile};
use multigame::game::{ActionSpace, MixedStrategy, NormalFormGame};
use multigame::multi::{MultiGame, TypeSpace};
use multigame::rational::{int, rat, Rational};
use multigame::regularity::{extend_witness, Witness};
use multigame::simplex::{vertices, SimplexPoint};
use multigame::solver::{is_nash, pure_ne_enumerate, support_enumeration_2p};
use multigame::transform::{normalize_type, to_generalized_mg, to_mg, OwnTypeLinearGame};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

/// Nonnegative integer weights, not all zero, normalized to a distribution.
fn distribution(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(0i64..=6, len)
        .prop_filter("some positive mass", |w| w.iter().any(|&x| x > 0))
        .prop_map(|w| {
            let total: i64 = w.iter().sum();
            w.into_iter().map(|x| rat(x, total)).collect()
        })
}

fn mixed_strategy(len: usize) -> impl Strategy<Value = MixedStrategy> {
    distribution(len).prop_map(|p| MixedStrategy::new(p).unwrap())
}

fn simplex_point(dim: usize) -> impl Strategy<Value = SimplexPoint> {
    distribution(dim).prop_map(|p| SimplexPoint::new(p).unwrap())
}

fn game(agents: usize, actions: usize) -> impl Strategy<Value = NormalFormGame> {
    let profiles = actions.pow(agents as u32);
    proptest::collection::vec(
        proptest::collection::vec(small_rational(), profiles),
        agents,
    )
    .prop_map(move |tables| {
        NormalFormGame::from_tables(ActionSpace::uniform(agents, actions), tables).unwrap()
    })
}

fn multgames(m: usize, actions: usize) -> impl Strategy<Value = MultiGame> {
    proptest::collection::vec(game(2, actions), m).prop_map(|basic| {
        MultiGame::new(basic, vec![TypeSpace::FullSimplex; 2]).unwrap()
    })
}

/// Independent double-loop deviation scan, kept separate from the solver's
/// best-response machinery.
fn brute_force_pure_ne(g: &NormalFormGame) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for profile in g.actions().profiles() {
        let mut ok = true;
        'agents: for i in 0..g.agents() {
            let base = g.pure_payoff(&profile).unwrap()[i].clone();
            for a in 0..g.actions().count(i) {
                let mut dev = profile.clone();
                dev[i] = a;
                if g.pure_payoff(&dev).unwrap()[i] > base {
                    ok = false;
                    break 'agents;
                }
            }
        }
        if ok {
            out.push(profile);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Fixing everyone else, the payoff of a mixture is the mixture of the
    /// payoffs, for every agent's payoff at once.
    #[test]
    fn mixed_payoff_is_multilinear(
        g in game(2, 3),
        s0a in mixed_strategy(3),
        s0b in mixed_strategy(3),
        s1 in mixed_strategy(3),
        lw in 0i64..=4,
    ) {
        let lambda = rat(lw, 4);
        let blended = MixedStrategy::new(
            s0a.probs().iter().zip(s0b.probs())
                .map(|(p, q)| &lambda * p + (int(1) - &lambda) * q)
                .collect(),
        ).unwrap();
        let at_blend = g.mixed_payoff(&[blended, s1.clone()]).unwrap();
        let at_a = g.mixed_payoff(&[s0a, s1.clone()]).unwrap();
        let at_b = g.mixed_payoff(&[s0b, s1]).unwrap();
        for i in 0..2 {
            prop_assert_eq!(
                at_blend[i].clone(),
                &lambda * &at_a[i] + (int(1) - &lambda) * &at_b[i]
            );
        }
    }

    /// In a multi-game, an agent's local payoff at a vertex type equals the
    /// basic-game payoff no matter what the other agents' types are.
    #[test]
    fn vertex_local_payoff_ignores_other_types(
        mg in multgames(3, 2),
        other in simplex_point(3),
        j in 0usize..3,
    ) {
        let verts = vertices(3);
        let theta = vec![verts[j].clone(), other];
        let local = mg.local_game(&theta).unwrap();
        for profile in mg.actions().profiles() {
            prop_assert_eq!(
                local.payoff(0, &profile).unwrap(),
                mg.basic(j).payoff(0, &profile).unwrap()
            );
        }
    }

    /// Local-game payoffs match an independent summation of the blend.
    #[test]
    fn local_game_matches_direct_summation(
        mg in double_multigame(),
        t0 in simplex_point(2),
        t1 in simplex_point(2),
    ) {
        let local = mg.local_game(&[t0.clone(), t1.clone()]).unwrap();
        for profile in mg.actions().profiles() {
            for (i, t) in [(0usize, &t0), (1usize, &t1)] {
                let mut expect = Rational::zero();
                for j in 0..mg.dims() {
                    expect += t.coord(j) * mg.basic(j).payoff(i, &profile).unwrap();
                }
                prop_assert_eq!(local.payoff(i, &profile).unwrap(), &expect);
            }
        }
    }

    /// Both directions of the prior-independence equivalence on finite
    /// games: a point-mass prior at a type profile makes the BNE check
    /// coincide with the local Nash check there.
    #[test]
    fn point_mass_bne_is_local_nash(
        mg in double_multigame(),
        maps in proptest::collection::vec(mixed_strategy(2), 4),
        grid_t0 in 0usize..2,
        grid_t1 in 0usize..2,
    ) {
        let grids = multigame::catalog::unit_interval_grid(1);
        let game = multigame::transform::mg_to_finite_bayesian(&mg, &grids).unwrap();
        let sigma = StrategyMapProfile::new(
            &game,
            vec![maps[0..2].to_vec(), maps[2..4].to_vec()],
        ).unwrap();
        let theta = vec![grid_t0, grid_t1];
        let prior = Prior::point_mass(&game, &theta).unwrap();
        let local = game.local_game(&theta).unwrap();
        prop_assert_eq!(
            is_bne(&game, &sigma, &prior).unwrap(),
            is_nash(&local, &sigma.evaluate(&theta)).unwrap()
        );
    }

    /// Normalization is idempotent and degree-0 homogeneous.
    #[test]
    fn normalize_is_scale_invariant(
        raw in proptest::collection::vec(0i64..=9, 2..=4)
            .prop_filter("nonzero", |v| v.iter().any(|&x| x > 0)),
        c in positive_rational(),
    ) {
        let raw: Vec<Rational> = raw.into_iter().map(int).collect();
        let scaled: Vec<Rational> = raw.iter().map(|x| x * &c).collect();
        let p = normalize_type(&raw).unwrap();
        prop_assert_eq!(normalize_type(&scaled).unwrap(), p.clone());
        prop_assert_eq!(normalize_type(p.coords()).unwrap(), p);
    }

    /// Positive rescaling of one agent's payoffs never changes equilibrium
    /// sets: argmax invariance.
    #[test]
    fn rescaling_preserves_equilibria(
        g in game(2, 3),
        agent in 0usize..2,
        c in positive_rational(),
    ) {
        let scaled = g.scale_agent_payoffs(agent, &c).unwrap();
        prop_assert_eq!(
            pure_ne_enumerate(&g).pure_profiles(),
            pure_ne_enumerate(&scaled).pure_profiles()
        );
        let before = support_enumeration_2p(&g).unwrap();
        let after = support_enumeration_2p(&scaled).unwrap();
        let profiles = |r: &multigame::solver::NEResult| -> Vec<Vec<MixedStrategy>> {
            r.equilibria.iter().map(|e| e.strategies.clone()).collect()
        };
        prop_assert_eq!(profiles(&before), profiles(&after));
    }

    /// The barycentric extension of any witness is a valid distribution at
    /// every simplex point, and restricts to the witness at vertices.
    #[test]
    fn witness_extension_is_a_distribution(
        mg in double_multigame(),
        w00 in mixed_strategy(2),
        w01 in mixed_strategy(2),
        w10 in mixed_strategy(2),
        w11 in mixed_strategy(2),
        theta in simplex_point(2),
    ) {
        let w = Witness::new(&mg, vec![vec![w00.clone(), w01], vec![w10, w11]]).unwrap();
        let s = extend_witness(&w, 0, &theta);
        // revalidating proves mass 1 and nonnegativity
        prop_assert!(MixedStrategy::new(s.probs().to_vec()).is_ok());
        let verts = vertices(2);
        prop_assert_eq!(&extend_witness(&w, 0, &verts[0]), &w00);
    }

    /// Multi-game round trip: the coefficient form rebuilds exactly, and
    /// the generalized construction matches the original utilities at
    /// vertex profiles (where it reads off single coefficients).
    #[test]
    fn transforms_round_trip(
        coeff0 in proptest::collection::vec(
            proptest::collection::vec(small_rational(), 2), 4),
        coeff1 in proptest::collection::vec(
            proptest::collection::vec(small_rational(), 2), 4),
    ) {
        let own = OwnTypeLinearGame::new(
            ActionSpace::uniform(2, 2),
            2,
            vec![coeff0, coeff1],
            vec![vec![], vec![]],
        ).unwrap();
        let mg = to_mg(&own).unwrap();
        for profile in own.actions().profiles() {
            for i in 0..2 {
                let l = own.coefficient(i, &profile).unwrap().to_vec();
                for j in 0..2 {
                    prop_assert_eq!(&l[j], mg.basic(j).payoff(i, &profile).unwrap());
                }
            }
        }
        let full = own.to_type_linear();
        let gmg = to_generalized_mg(&full).unwrap();
        let verts = vertices(2);
        for j0 in 0..2 {
            for j1 in 0..2 {
                let theta = vec![verts[j0].clone(), verts[j1].clone()];
                for profile in own.actions().profiles() {
                    for i in 0..2 {
                        // sum over owners of the picked-out coefficients
                        let expect = gmg.basic(0, j0).payoff(i, &profile).unwrap()
                            + gmg.basic(1, j1).payoff(i, &profile).unwrap();
                        prop_assert_eq!(gmg.local_utility(i, &profile, &theta).unwrap(), expect);
                    }
                }
            }
        }
    }

    /// Support enumeration restricted to singleton supports reproduces the
    /// pure enumeration, and everything it returns verifies.
    #[test]
    fn support_enumeration_agrees_with_pure_scan(g in game(2, 3)) {
        let pure = pure_ne_enumerate(&g).pure_profiles();
        let support = support_enumeration_2p(&g).unwrap();
        let singleton: Vec<Vec<usize>> = support.pure_profiles();
        prop_assert_eq!(singleton, pure);
        for ne in &support.equilibria {
            prop_assert!(is_nash(&g, &ne.strategies).unwrap());
        }
    }

    /// The pure enumerator agrees with an independent deviation scan on
    /// games up to 3 agents and 4 actions.
    #[test]
    fn pure_enumeration_matches_brute_force(
        g in (2usize..=3, 2usize..=4).prop_flat_map(|(n, k)| game(n, k)),
    ) {
        prop_assert_eq!(pure_ne_enumerate(&g).pure_profiles(), brute_force_pure_ne(&g));
    }
}

// two-basic-game multi-games are the workhorse shape above
fn double_multigame() -> impl Strategy<Value = MultiGame> {
    proptest::collection::vec(game(2, 2), 2).prop_map(|basic| {
        MultiGame::new(basic, vec![TypeSpace::FullSimplex; 2]).unwrap()
    })
}

/// Every value is immutable data; sharing across threads is safe by
/// construction.
#[test]
fn domain_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<NormalFormGame>();
    check::<MixedStrategy>();
    check::<SimplexPoint>();
    check::<MultiGame>();
    check::<multigame::multi::GeneralizedMultiGame>();
    check::<multigame::bayes::FiniteBayesianGame>();
    check::<multigame::bayes::Prior>();
    check::<multigame::bayes::StrategyMapProfile>();
    check::<Witness>();
    check::<multigame::staged::TrustStageGame>();
}
