//! Type normalization and the equivalence constructions between type-linear
//! Bayesian games and (generalized) multi-games, together with an exact
//! equivalence audit.
//!
//! A type-linear game stores its utility as explicit coefficient vectors
//! `L_ik(a)`, so that `u_i(a, theta) = sum_k L_ik(a) . theta_k`. The
//! transforms read the coefficients off into basic-game payoffs; linearity is
//! never inferred from a black-box utility.

use num_traits::Zero;
use rand::Rng;

use crate::bayes::FiniteBayesianGame;
use crate::error::GameError;
use crate::game::ActionSpace;
use crate::game::NormalFormGame;
use crate::multi::{GeneralizedMultiGame, MultiGame, TypeSpace};
use crate::rational::Rational;
use crate::simplex::{vertices, SimplexPoint};

/// Divide a nonnegative, nonzero vector by its coordinate sum, landing on the
/// simplex. Errors on a zero vector or any negative component.
pub fn normalize_type(raw: &[Rational]) -> Result<SimplexPoint, GameError> {
    if raw.is_empty() {
        return Err(GameError::InvalidTypeProfile("empty type vector".into()));
    }
    if raw.iter().any(|c| c < &Rational::zero()) {
        return Err(GameError::InvalidTypeProfile(
            "negative type component".into(),
        ));
    }
    let total: Rational = raw.iter().sum();
    if total.is_zero() {
        return Err(GameError::InvalidTypeProfile("zero type vector".into()));
    }
    SimplexPoint::new(raw.iter().map(|c| c / &total).collect())
}

/// Bayesian game whose utilities are linear in every agent's type:
/// `u_i(a, theta) = sum_k L_ik(a) . theta_k` with m-dimensional raw types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeLinearGame {
    actions: ActionSpace,
    dims: usize,
    /// `coeff[i][k][profile_index]` is the m-vector `L_ik(a)`.
    coeff: Vec<Vec<Vec<Vec<Rational>>>>,
    /// Raw (unnormalized) finite type sets, retained for audit.
    raw_types: Vec<Vec<Vec<Rational>>>,
}

impl TypeLinearGame {
    pub fn new(
        actions: ActionSpace,
        dims: usize,
        coeff: Vec<Vec<Vec<Vec<Rational>>>>,
        raw_types: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, GameError> {
        let n = actions.agents();
        if dims == 0 {
            return Err(GameError::InvalidGame("type dimension m must be >= 1".into()));
        }
        if coeff.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "coefficient map (agents)".into(),
                expected: n,
                got: coeff.len(),
            });
        }
        let profiles = actions.num_profiles();
        for (i, per_k) in coeff.iter().enumerate() {
            if per_k.len() != n {
                return Err(GameError::DimensionMismatch {
                    context: format!("coefficient map L_{{{i},k}} (k range)"),
                    expected: n,
                    got: per_k.len(),
                });
            }
            for (k, per_profile) in per_k.iter().enumerate() {
                if per_profile.len() != profiles {
                    return Err(GameError::DimensionMismatch {
                        context: format!("L_{{{i},{k}}} profiles"),
                        expected: profiles,
                        got: per_profile.len(),
                    });
                }
                for v in per_profile {
                    if v.len() != dims {
                        return Err(GameError::DimensionMismatch {
                            context: format!("L_{{{i},{k}}} vector"),
                            expected: dims,
                            got: v.len(),
                        });
                    }
                }
            }
        }
        validate_raw_types(&raw_types, n, dims)?;
        Ok(TypeLinearGame {
            actions,
            dims,
            coeff,
            raw_types,
        })
    }

    pub fn actions(&self) -> &ActionSpace {
        &self.actions
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn raw_types(&self) -> &[Vec<Vec<Rational>>] {
        &self.raw_types
    }

    pub fn coefficient(&self, agent: usize, about: usize, profile: &[usize]) -> Result<&[Rational], GameError> {
        let idx = self.actions.profile_index(profile)?;
        Ok(&self.coeff[agent][about][idx])
    }

    /// Direct evaluation of `u_i(a, theta)`; the independent route the
    /// equivalence audit compares against.
    pub fn utility(
        &self,
        agent: usize,
        profile: &[usize],
        theta: &[SimplexPoint],
    ) -> Result<Rational, GameError> {
        let idx = self.actions.profile_index(profile)?;
        if theta.len() != self.actions.agents() {
            return Err(GameError::DimensionMismatch {
                context: "type profile".into(),
                expected: self.actions.agents(),
                got: theta.len(),
            });
        }
        let mut total = Rational::zero();
        for (k, t) in theta.iter().enumerate() {
            if t.dim() != self.dims {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {k} type has dimension {}, game has {}",
                    t.dim(),
                    self.dims
                )));
            }
            for (j, w) in t.coords().iter().enumerate() {
                if !w.is_zero() {
                    total += w * &self.coeff[agent][k][idx][j];
                }
            }
        }
        Ok(total)
    }
}

/// Type-linear game whose utilities depend on the owner's type only
/// (`L_ik = 0` for `k != i`, stored sparsely as just `L_ii`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OwnTypeLinearGame {
    actions: ActionSpace,
    dims: usize,
    /// `coeff[i][profile_index]` is the m-vector `L_ii(a)`.
    coeff: Vec<Vec<Vec<Rational>>>,
    raw_types: Vec<Vec<Vec<Rational>>>,
}

impl OwnTypeLinearGame {
    pub fn new(
        actions: ActionSpace,
        dims: usize,
        coeff: Vec<Vec<Vec<Rational>>>,
        raw_types: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, GameError> {
        let n = actions.agents();
        if dims == 0 {
            return Err(GameError::InvalidGame("type dimension m must be >= 1".into()));
        }
        if coeff.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "coefficient map (agents)".into(),
                expected: n,
                got: coeff.len(),
            });
        }
        let profiles = actions.num_profiles();
        for (i, per_profile) in coeff.iter().enumerate() {
            if per_profile.len() != profiles {
                return Err(GameError::DimensionMismatch {
                    context: format!("L_{{{i},{i}}} profiles"),
                    expected: profiles,
                    got: per_profile.len(),
                });
            }
            for v in per_profile {
                if v.len() != dims {
                    return Err(GameError::DimensionMismatch {
                        context: format!("L_{{{i},{i}}} vector"),
                        expected: dims,
                        got: v.len(),
                    });
                }
            }
        }
        validate_raw_types(&raw_types, n, dims)?;
        Ok(OwnTypeLinearGame {
            actions,
            dims,
            coeff,
            raw_types,
        })
    }

    pub fn actions(&self) -> &ActionSpace {
        &self.actions
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn raw_types(&self) -> &[Vec<Vec<Rational>>] {
        &self.raw_types
    }

    pub fn coefficient(&self, agent: usize, profile: &[usize]) -> Result<&[Rational], GameError> {
        let idx = self.actions.profile_index(profile)?;
        Ok(&self.coeff[agent][idx])
    }

    pub fn utility(
        &self,
        agent: usize,
        profile: &[usize],
        theta_i: &SimplexPoint,
    ) -> Result<Rational, GameError> {
        let idx = self.actions.profile_index(profile)?;
        if theta_i.dim() != self.dims {
            return Err(GameError::InvalidTypeProfile(format!(
                "type has dimension {}, game has {}",
                theta_i.dim(),
                self.dims
            )));
        }
        let mut total = Rational::zero();
        for (j, w) in theta_i.coords().iter().enumerate() {
            if !w.is_zero() {
                total += w * &self.coeff[agent][idx][j];
            }
        }
        Ok(total)
    }

    /// Raw-vector evaluation (no normalization), used to test positive
    /// scaling homogeneity of the utility itself.
    pub fn utility_raw(
        &self,
        agent: usize,
        profile: &[usize],
        raw_theta_i: &[Rational],
    ) -> Result<Rational, GameError> {
        let idx = self.actions.profile_index(profile)?;
        if raw_theta_i.len() != self.dims {
            return Err(GameError::DimensionMismatch {
                context: "raw type vector".into(),
                expected: self.dims,
                got: raw_theta_i.len(),
            });
        }
        let mut total = Rational::zero();
        for (j, w) in raw_theta_i.iter().enumerate() {
            total += w * &self.coeff[agent][idx][j];
        }
        Ok(total)
    }

    /// Promote to the general form with `L_ik = 0` for `k != i`.
    pub fn to_type_linear(&self) -> TypeLinearGame {
        let n = self.actions.agents();
        let profiles = self.actions.num_profiles();
        let zero_vec = vec![Rational::zero(); self.dims];
        let coeff = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        if k == i {
                            self.coeff[i].clone()
                        } else {
                            vec![zero_vec.clone(); profiles]
                        }
                    })
                    .collect()
            })
            .collect();
        TypeLinearGame {
            actions: self.actions.clone(),
            dims: self.dims,
            coeff,
            raw_types: self.raw_types.clone(),
        }
    }
}

fn validate_raw_types(
    raw_types: &[Vec<Vec<Rational>>],
    agents: usize,
    dims: usize,
) -> Result<(), GameError> {
    if raw_types.len() != agents {
        return Err(GameError::DimensionMismatch {
            context: "raw type spaces".into(),
            expected: agents,
            got: raw_types.len(),
        });
    }
    for (i, points) in raw_types.iter().enumerate() {
        for v in points {
            if v.len() != dims {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {i} raw type"),
                    expected: dims,
                    got: v.len(),
                });
            }
            if v.iter().any(|c| c < &Rational::zero()) {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} raw type has a negative component"
                )));
            }
            if v.iter().all(Zero::is_zero) {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} raw type is the zero vector"
                )));
            }
        }
    }
    Ok(())
}

fn normalized_type_spaces(
    raw_types: &[Vec<Vec<Rational>>],
) -> Result<Vec<TypeSpace>, GameError> {
    raw_types
        .iter()
        .map(|points| {
            if points.is_empty() {
                Ok(TypeSpace::FullSimplex)
            } else {
                Ok(TypeSpace::Finite(
                    points
                        .iter()
                        .map(|v| normalize_type(v))
                        .collect::<Result<Vec<_>, _>>()?,
                ))
            }
        })
        .collect()
}

/// The generalized multi-game whose basic-game
/// payoffs read the coefficients off componentwise,
/// `u_hat_ikj(a) = (L_ik(a))_j`, with normalized type spaces.
pub fn to_generalized_mg(g: &TypeLinearGame) -> Result<GeneralizedMultiGame, GameError> {
    let n = g.actions.agents();
    let basic = (0..n)
        .map(|k| {
            (0..g.dims)
                .map(|j| {
                    NormalFormGame::from_fn(g.actions.clone(), |i, profile| {
                        let idx = g.actions.profile_index(profile).expect("enumerated");
                        g.coeff[i][k][idx][j].clone()
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    GeneralizedMultiGame::new(basic, normalized_type_spaces(&g.raw_types)?)
}

/// The own-type-linear construction: the multi-game with
/// `u_ij(a) = (L_ii(a))_j`.
pub fn to_mg(g: &OwnTypeLinearGame) -> Result<MultiGame, GameError> {
    let basic = (0..g.dims)
        .map(|j| {
            NormalFormGame::from_fn(g.actions.clone(), |i, profile| {
                let idx = g.actions.profile_index(profile).expect("enumerated");
                g.coeff[i][idx][j].clone()
            })
        })
        .collect();
    MultiGame::new(basic, normalized_type_spaces(&g.raw_types)?)
}

/// One exact-equality failure found by the equivalence audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceViolation {
    pub profile: Vec<usize>,
    pub theta: Vec<SimplexPoint>,
    pub agent: usize,
    pub original: Rational,
    pub transformed: Rational,
}

/// Outcome of comparing a linear game against its multi-game form on a set
/// of sampled type profiles. Correct transforms produce an empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub checked: usize,
    pub violations: Vec<EquivalenceViolation>,
}

impl EquivalenceReport {
    pub fn exact(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compare `u_i(a, theta)` under the own-type-linear representation against
/// the multi-game's local utility, over every action profile and each
/// sampled type profile.
pub fn audit_mg_equivalence(
    original: &OwnTypeLinearGame,
    transformed: &MultiGame,
    samples: &[Vec<SimplexPoint>],
) -> Result<EquivalenceReport, GameError> {
    if original.actions() != transformed.actions() {
        return Err(GameError::InvalidGame(
            "equivalence audit needs a shared action space".into(),
        ));
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for theta in samples {
        for profile in original.actions.profiles() {
            for agent in 0..original.actions.agents() {
                let lhs = original.utility(agent, &profile, &theta[agent])?;
                let rhs = transformed.local_utility(agent, &profile, &theta[agent])?;
                checked += 1;
                if lhs != rhs {
                    violations.push(EquivalenceViolation {
                        profile: profile.clone(),
                        theta: theta.clone(),
                        agent,
                        original: lhs,
                        transformed: rhs,
                    });
                }
            }
        }
    }
    Ok(EquivalenceReport { checked, violations })
}

/// Same audit for the generalized construction.
pub fn audit_gmg_equivalence(
    original: &TypeLinearGame,
    transformed: &GeneralizedMultiGame,
    samples: &[Vec<SimplexPoint>],
) -> Result<EquivalenceReport, GameError> {
    if original.actions() != transformed.actions() {
        return Err(GameError::InvalidGame(
            "equivalence audit needs a shared action space".into(),
        ));
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for theta in samples {
        for profile in original.actions.profiles() {
            for agent in 0..original.actions.agents() {
                let lhs = original.utility(agent, &profile, theta)?;
                let rhs = transformed.local_utility(agent, &profile, theta)?;
                checked += 1;
                if lhs != rhs {
                    violations.push(EquivalenceViolation {
                        profile: profile.clone(),
                        theta: theta.clone(),
                        agent,
                        original: lhs,
                        transformed: rhs,
                    });
                }
            }
        }
    }
    Ok(EquivalenceReport { checked, violations })
}

/// All joint vertex type profiles `V^n` for an m-dimensional n-agent game.
pub fn vertex_type_profiles(agents: usize, dims: usize) -> Vec<Vec<SimplexPoint>> {
    use itertools::Itertools;
    let verts = vertices(dims);
    (0..agents)
        .map(|_| verts.clone())
        .multi_cartesian_product()
        .collect()
}

/// Seeded random simplex type profiles (small-denominator rationals).
pub fn random_type_profiles<R: Rng>(
    agents: usize,
    dims: usize,
    count: usize,
    rng: &mut R,
) -> Vec<Vec<SimplexPoint>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let profile: Option<Vec<SimplexPoint>> = (0..agents)
            .map(|_| {
                let raw: Vec<Rational> = (0..dims)
                    .map(|_| Rational::from_integer((rng.gen_range(0..=12) as i64).into()))
                    .collect();
                normalize_type(&raw).ok()
            })
            .collect();
        if let Some(p) = profile {
            out.push(p);
        }
    }
    out
}

/// Explicit conversion from a multi-game with finite type spaces to an
/// opaque-type finite Bayesian game; type labels render the simplex points.
pub fn mg_to_finite_bayesian(
    mg: &MultiGame,
    grids: &[Vec<SimplexPoint>],
) -> Result<FiniteBayesianGame, GameError> {
    if grids.len() != mg.agents() {
        return Err(GameError::DimensionMismatch {
            context: "type grids".into(),
            expected: mg.agents(),
            got: grids.len(),
        });
    }
    for (i, g) in grids.iter().enumerate() {
        if g.is_empty() {
            return Err(GameError::InvalidTypeProfile(format!(
                "agent {i} has an empty type grid"
            )));
        }
        for p in g {
            if p.dim() != mg.dims() {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} grid point has dimension {}, game has {}",
                    p.dim(),
                    mg.dims()
                )));
            }
        }
    }
    let labels: Vec<Vec<String>> = grids
        .iter()
        .map(|g| g.iter().map(SimplexPoint::describe).collect())
        .collect();
    use itertools::Itertools;
    let n = mg.agents();
    let mut utility = vec![Vec::new(); n];
    for combo in grids.iter().map(|g| g.iter()).multi_cartesian_product() {
        let theta: Vec<SimplexPoint> = combo.into_iter().cloned().collect();
        let local = mg.local_game(&theta)?;
        for (i, per_type) in utility.iter_mut().enumerate() {
            let mut row = Vec::with_capacity(mg.actions().num_profiles());
            for profile in mg.actions().profiles() {
                row.push(local.payoff(i, &profile)?.clone());
            }
            per_type.push(row);
        }
    }
    FiniteBayesianGame::new(mg.actions().clone(), labels, utility)
}
