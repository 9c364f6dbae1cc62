//! Multi-games and generalized multi-games: simultaneous play of m basic
//! games with utilities blended by simplex-valued types.
//!
//! A multi-game gives agent i the payoff `sum_j u_ij(a) * theta_i[j]`; the
//! generalized form blends over every agent's type, `sum_{k,j} u_ikj(a) *
//! theta_k[j]`.

use num_traits::Zero;

use crate::error::GameError;
use crate::game::{ActionSpace, NormalFormGame};
use crate::rational::Rational;
use crate::simplex::SimplexPoint;

/// An agent's admissible normalized types: an explicit finite set, or the
/// whole simplex (utilities extend linearly, so regularity machinery treats
/// the full simplex as the effective type space either way).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeSpace {
    FullSimplex,
    Finite(Vec<SimplexPoint>),
}

impl TypeSpace {
    fn check_dim(&self, m: usize, agent: usize) -> Result<(), GameError> {
        if let TypeSpace::Finite(points) = self {
            for p in points {
                if p.dim() != m {
                    return Err(GameError::InvalidTypeProfile(format!(
                        "agent {agent} lists a type of dimension {}, game has {m}",
                        p.dim()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// m basic n-agent games over one shared action space, one per type
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGame {
    basic: Vec<NormalFormGame>,
    type_spaces: Vec<TypeSpace>,
}

impl MultiGame {
    pub fn new(
        basic: Vec<NormalFormGame>,
        type_spaces: Vec<TypeSpace>,
    ) -> Result<Self, GameError> {
        if basic.is_empty() {
            return Err(GameError::InvalidGame("multi-game needs m >= 1".into()));
        }
        let actions = basic[0].actions().clone();
        for (j, g) in basic.iter().enumerate() {
            if g.actions() != &actions {
                return Err(GameError::InvalidGame(format!(
                    "basic game {j} does not share the common action space"
                )));
            }
        }
        let n = actions.agents();
        if type_spaces.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "type spaces".into(),
                expected: n,
                got: type_spaces.len(),
            });
        }
        let m = basic.len();
        for (i, ts) in type_spaces.iter().enumerate() {
            ts.check_dim(m, i)?;
        }
        Ok(MultiGame { basic, type_spaces })
    }

    pub fn agents(&self) -> usize {
        self.actions().agents()
    }

    /// Number of basic games / type dimensions m.
    pub fn dims(&self) -> usize {
        self.basic.len()
    }

    pub fn actions(&self) -> &ActionSpace {
        self.basic[0].actions()
    }

    pub fn basic(&self, j: usize) -> &NormalFormGame {
        &self.basic[j]
    }

    pub fn basic_games(&self) -> &[NormalFormGame] {
        &self.basic
    }

    pub fn type_spaces(&self) -> &[TypeSpace] {
        &self.type_spaces
    }

    fn check_theta(&self, theta: &[SimplexPoint]) -> Result<(), GameError> {
        if theta.len() != self.agents() {
            return Err(GameError::DimensionMismatch {
                context: "type profile".into(),
                expected: self.agents(),
                got: theta.len(),
            });
        }
        for (i, t) in theta.iter().enumerate() {
            if t.dim() != self.dims() {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} type has dimension {}, game has {}",
                    t.dim(),
                    self.dims()
                )));
            }
        }
        Ok(())
    }

    /// Agent `i`'s local utility at `a` under own type `theta_i`:
    /// `sum_j u_ij(a) * theta_i[j]`.
    pub fn local_utility(
        &self,
        agent: usize,
        profile: &[usize],
        theta_i: &SimplexPoint,
    ) -> Result<Rational, GameError> {
        if theta_i.dim() != self.dims() {
            return Err(GameError::InvalidTypeProfile(format!(
                "type dimension {} does not match game dimension {}",
                theta_i.dim(),
                self.dims()
            )));
        }
        let mut total = Rational::zero();
        for (j, g) in self.basic.iter().enumerate() {
            let w = theta_i.coord(j);
            if w.is_zero() {
                continue;
            }
            total += w * g.payoff(agent, profile)?;
        }
        Ok(total)
    }

    /// The complete-information game at a fixed type profile.
    pub fn local_game(&self, theta: &[SimplexPoint]) -> Result<NormalFormGame, GameError> {
        self.check_theta(theta)?;
        let actions = self.actions().clone();
        let mut tables = vec![Vec::with_capacity(actions.num_profiles()); actions.agents()];
        for profile in actions.profiles() {
            for (i, table) in tables.iter_mut().enumerate() {
                table.push(self.local_utility(i, &profile, &theta[i])?);
            }
        }
        NormalFormGame::from_tables(actions, tables)
    }

    /// Copy with agent `agent`'s payoffs in every basic game scaled by `c`.
    pub fn scale_agent_payoffs(&self, agent: usize, c: &Rational) -> Result<Self, GameError> {
        let basic = self
            .basic
            .iter()
            .map(|g| g.scale_agent_payoffs(agent, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiGame {
            basic,
            type_spaces: self.type_spaces.clone(),
        })
    }
}

/// Generalized multi-game: one basic game per (owner agent k, dimension j),
/// where `basic(k, j)` carries payoff `u_ikj` for every agent i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedMultiGame {
    /// `basic[k][j]`
    basic: Vec<Vec<NormalFormGame>>,
    type_spaces: Vec<TypeSpace>,
}

impl GeneralizedMultiGame {
    pub fn new(
        basic: Vec<Vec<NormalFormGame>>,
        type_spaces: Vec<TypeSpace>,
    ) -> Result<Self, GameError> {
        if basic.is_empty() || basic[0].is_empty() {
            return Err(GameError::InvalidGame(
                "generalized multi-game needs n >= 1 and m >= 1".into(),
            ));
        }
        let actions = basic[0][0].actions().clone();
        let n = actions.agents();
        let m = basic[0].len();
        if basic.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "basic game owners".into(),
                expected: n,
                got: basic.len(),
            });
        }
        for (k, row) in basic.iter().enumerate() {
            if row.len() != m {
                return Err(GameError::DimensionMismatch {
                    context: format!("agent {k} basic games"),
                    expected: m,
                    got: row.len(),
                });
            }
            for (j, g) in row.iter().enumerate() {
                if g.actions() != &actions {
                    return Err(GameError::InvalidGame(format!(
                        "basic game ({k}, {j}) does not share the common action space"
                    )));
                }
            }
        }
        if type_spaces.len() != n {
            return Err(GameError::DimensionMismatch {
                context: "type spaces".into(),
                expected: n,
                got: type_spaces.len(),
            });
        }
        for (i, ts) in type_spaces.iter().enumerate() {
            ts.check_dim(m, i)?;
        }
        Ok(GeneralizedMultiGame { basic, type_spaces })
    }

    pub fn agents(&self) -> usize {
        self.actions().agents()
    }

    pub fn dims(&self) -> usize {
        self.basic[0].len()
    }

    pub fn actions(&self) -> &ActionSpace {
        self.basic[0][0].actions()
    }

    pub fn basic(&self, owner: usize, dim: usize) -> &NormalFormGame {
        &self.basic[owner][dim]
    }

    pub fn type_spaces(&self) -> &[TypeSpace] {
        &self.type_spaces
    }

    /// Agent `i`'s local utility: `sum_{k,j} u_ikj(a) * theta_k[j]`.
    pub fn local_utility(
        &self,
        agent: usize,
        profile: &[usize],
        theta: &[SimplexPoint],
    ) -> Result<Rational, GameError> {
        let mut total = Rational::zero();
        for (k, row) in self.basic.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                let w = theta[k].coord(j);
                if w.is_zero() {
                    continue;
                }
                total += w * g.payoff(agent, profile)?;
            }
        }
        Ok(total)
    }

    pub fn local_game(&self, theta: &[SimplexPoint]) -> Result<NormalFormGame, GameError> {
        if theta.len() != self.agents() {
            return Err(GameError::DimensionMismatch {
                context: "type profile".into(),
                expected: self.agents(),
                got: theta.len(),
            });
        }
        for (i, t) in theta.iter().enumerate() {
            if t.dim() != self.dims() {
                return Err(GameError::InvalidTypeProfile(format!(
                    "agent {i} type has dimension {}, game has {}",
                    t.dim(),
                    self.dims()
                )));
            }
        }
        let actions = self.actions().clone();
        let mut tables = vec![Vec::with_capacity(actions.num_profiles()); actions.agents()];
        for profile in actions.profiles() {
            for (i, table) in tables.iter_mut().enumerate() {
                table.push(self.local_utility(i, &profile, theta)?);
            }
        }
        NormalFormGame::from_tables(actions, tables)
    }
}
