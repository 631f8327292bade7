//! Executable hardness reductions between satisfiability and SVR existence:
//! monotone NAE-3SAT to unit-square SVRs and 3SAT to rectangle SVRs, in both
//! directions (formula to graph pair, satisfying assignment to explicit
//! drawing, valid drawing back to satisfying assignment).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::{Coord, Interval};
use crate::graph::{edge, GraphPair};
use crate::shape::{Drawing, Family, Shape};
use crate::visibility::validate_svr;

/// A monotone NAE-3SAT formula: every clause has exactly three positive
/// literal slots (duplicates allowed) and asks for at least one true and at
/// least one false literal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NaeInstance {
    pub n_vars: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl NaeInstance {
    pub fn new(n_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self, SatError> {
        for (i, c) in clauses.iter().enumerate() {
            for &v in c {
                if v == 0 || v > n_vars {
                    return Err(SatError::VariableOutOfRange { clause: i, var: v });
                }
            }
        }
        Ok(NaeInstance { n_vars, clauses })
    }

    /// Index of the first clause with all-equal literal values, if any.
    pub fn violated_clause(&self, alpha: &Assignment) -> Option<usize> {
        self.clauses.iter().position(|c| {
            let vals: Vec<bool> = c.iter().map(|&v| alpha.get(v)).collect();
            vals.iter().all(|&b| b) || vals.iter().all(|&b| !b)
        })
    }
}

/// A 3SAT formula in CNF: clauses of exactly three signed literals.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Cnf3Instance {
    pub n_vars: usize,
    pub clauses: Vec<[i64; 3]>,
}

impl Cnf3Instance {
    pub fn new(n_vars: usize, clauses: Vec<[i64; 3]>) -> Result<Self, SatError> {
        for (i, c) in clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > n_vars {
                    return Err(SatError::VariableOutOfRange {
                        clause: i,
                        var: lit.unsigned_abs() as usize,
                    });
                }
            }
        }
        Ok(Cnf3Instance { n_vars, clauses })
    }

    /// Index of the first falsified clause, if any.
    pub fn violated_clause(&self, alpha: &Assignment) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|&lit| alpha.lit(lit)))
    }
}

/// A total truth assignment; variable `v` maps to `values[v - 1]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn all_false(n_vars: usize) -> Self {
        Assignment {
            values: vec![false; n_vars],
        }
    }

    pub fn get(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn set(&mut self, var: usize, value: bool) {
        self.values[var - 1] = value;
    }

    /// Truth value of a signed literal.
    pub fn lit(&self, lit: i64) -> bool {
        let v = self.get(lit.unsigned_abs() as usize);
        if lit > 0 {
            v
        } else {
            !v
        }
    }

    /// Parses a bit string like "0101" (variable 1 first, '1' = true).
    pub fn from_bits(bits: &str) -> Result<Self, SatError> {
        bits.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(SatError::BadAssignmentBit(other)),
            })
            .collect::<Result<Vec<bool>, _>>()
            .map(Assignment::new)
    }
}

impl std::fmt::Display for Assignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.values {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ReductionKind {
    #[serde(rename = "nae-ussvr")]
    NaeUssvr,
    #[serde(rename = "3sat-rsvr")]
    Cnf3Rsvr,
}

/// Role of one vertex of a reduction instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    /// Clause vertex (square in the clause consistency gadget).
    Clause { clause: usize },
    /// A literal occurrence as written in the formula. In the RSVR reduction
    /// this is a subdivision vertex of the clause spider.
    Occurrence {
        clause: usize,
        slot: usize,
        var: usize,
        negated: bool,
    },
    /// RSVR leaf vertex: the negation of its parent occurrence.
    Leaf {
        clause: usize,
        slot: usize,
        var: usize,
        negated: bool,
    },
}

/// Maps every vertex of a reduction instance to its role, and rebuilds the
/// graph pair and gadget memberships from those roles.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GadgetIndex {
    pub kind: ReductionKind,
    pub n_vars: usize,
    /// `roles[v - 1]` is the role of vertex `v`.
    pub roles: Vec<Role>,
}

impl GadgetIndex {
    /// The clause vertices in clause order (the G_H clause gadget).
    pub fn clause_gadget(&self) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = self
            .roles
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match r {
                Role::Clause { clause } => Some((*clause, i + 1)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, v)| v).collect()
    }

    /// All vertices standing for literal `var` (or `v̄ar` when `negated`),
    /// in appearance order (clause, then slot). This is the G_H consistency
    /// gadget for that literal.
    pub fn literal_gadget(&self, var: usize, negated: bool) -> Vec<usize> {
        let mut out: Vec<(usize, usize, usize)> = self
            .roles
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match *r {
                Role::Occurrence {
                    clause,
                    slot,
                    var: v,
                    negated: neg,
                }
                | Role::Leaf {
                    clause,
                    slot,
                    var: v,
                    negated: neg,
                } if v == var && neg == negated => Some((clause, slot, i + 1)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, _, v)| v).collect()
    }

    pub fn occurring_vars(&self) -> BTreeSet<usize> {
        self.roles
            .iter()
            .filter_map(|r| match *r {
                Role::Occurrence { var, .. } => Some(var),
                _ => None,
            })
            .collect()
    }

    /// The formula's clauses as signed literals, rebuilt from the roles.
    pub fn clauses(&self) -> Vec<[i64; 3]> {
        let mut map: BTreeMap<usize, [i64; 3]> = BTreeMap::new();
        for r in &self.roles {
            if let Role::Occurrence {
                clause,
                slot,
                var,
                negated,
            } = *r
            {
                let lit = if negated { -(var as i64) } else { var as i64 };
                map.entry(clause).or_insert([0; 3])[slot] = lit;
            }
        }
        map.into_values().collect()
    }

    /// Rebuilds the graph pair. G_v holds the satisfiability gadgets (claws
    /// or spiders), G_H the consistency gadgets (clause path plus one path
    /// per literal).
    pub fn to_graph_pair(&self) -> GraphPair {
        let n = self.roles.len();
        let mut clause_vertex: BTreeMap<usize, usize> = BTreeMap::new();
        let mut occ_vertex: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, r) in self.roles.iter().enumerate() {
            match *r {
                Role::Clause { clause } => {
                    clause_vertex.insert(clause, i + 1);
                }
                Role::Occurrence { clause, slot, .. } => {
                    occ_vertex.insert((clause, slot), i + 1);
                }
                Role::Leaf { .. } => {}
            }
        }
        let mut ev = BTreeSet::new();
        let mut eh = BTreeSet::new();
        for (i, r) in self.roles.iter().enumerate() {
            match *r {
                Role::Occurrence { clause, .. } => {
                    ev.insert(edge(i + 1, clause_vertex[&clause]));
                }
                Role::Leaf { clause, slot, .. } => {
                    ev.insert(edge(i + 1, occ_vertex[&(clause, slot)]));
                }
                Role::Clause { .. } => {}
            }
        }
        for w in self.clause_gadget().windows(2) {
            eh.insert(edge(w[0], w[1]));
        }
        let mut keys: BTreeSet<(usize, bool)> = BTreeSet::new();
        for r in &self.roles {
            match *r {
                Role::Occurrence { var, negated, .. } | Role::Leaf { var, negated, .. } => {
                    keys.insert((var, negated));
                }
                Role::Clause { .. } => {}
            }
        }
        for (var, negated) in keys {
            for w in self.literal_gadget(var, negated).windows(2) {
                eh.insert(edge(w[0], w[1]));
            }
        }
        GraphPair { n, ev, eh }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SatError {
    #[error("clause {clause}: variable {var} out of range")]
    VariableOutOfRange { clause: usize, var: usize },
    #[error("clause {0} has all-equal literal values (violates NAE)")]
    NotNae(usize),
    #[error("clause {0} is falsified by the assignment")]
    Unsatisfied(usize),
    #[error("clause {0}: no slot arrangement is compatible with the consistency gadget orders")]
    NoClauseConfig(usize),
    #[error("drawing is not a valid representation of the instance pair: {0}")]
    InvalidDrawing(String),
    #[error("gadget y-projections of variable {0} are not totally ordered against the clause gadget")]
    GadgetNotOrdered(usize),
    #[error("decoded assignment does not satisfy the instance (clause {0})")]
    DecodedUnsatisfiable(usize),
    #[error("assignment bit `{0}` is neither 0 nor 1")]
    BadAssignmentBit(char),
    #[error("assignment covers {got} variables, instance has {want}")]
    AssignmentWidth { got: usize, want: usize },
}

// --- NAE-3SAT → USSVR (unit squares) --------------------------------------

/// Per clause i: vertex 4i+1 is the clause vertex and 4i+2+s the slot-s
/// occurrence. G_v gets one K_{1,3} per clause with the clause vertex as
/// center; G_H links clause vertices into a path and the occurrences of each
/// variable into a path in appearance order.
pub fn build_ussvr_instance(f: &NaeInstance) -> (GraphPair, GadgetIndex) {
    let mut roles = Vec::with_capacity(4 * f.clauses.len());
    for (i, c) in f.clauses.iter().enumerate() {
        roles.push(Role::Clause { clause: i });
        for (s, &var) in c.iter().enumerate() {
            roles.push(Role::Occurrence {
                clause: i,
                slot: s,
                var,
                negated: false,
            });
        }
    }
    let idx = GadgetIndex {
        kind: ReductionKind::NaeUssvr,
        n_vars: f.n_vars,
        roles,
    };
    (idx.to_graph_pair(), idx)
}

/// Row assignment ρ shared by builder and tests: false variables get rows
/// 0..k−1 in index order, the clause gadget row k, true variables k+1.. in
/// index order, where k is the number of occurring false variables. Rows map
/// to y-intervals `[2ρ, 2ρ+1]`.
fn ussvr_rows(f: &NaeInstance, alpha: &Assignment) -> (i64, BTreeMap<usize, i64>) {
    let occurring: BTreeSet<usize> = f.clauses.iter().flatten().copied().collect();
    let mut rho = BTreeMap::new();
    let mut next = 0i64;
    for &v in occurring.iter().filter(|&&v| !alpha.get(v)) {
        rho.insert(v, next);
        next += 1;
    }
    let clause_rho = next;
    next += 1;
    for &v in occurring.iter().filter(|&&v| alpha.get(v)) {
        rho.insert(v, next);
        next += 1;
    }
    (clause_rho, rho)
}

/// Builds the explicit unit-square drawing encoding a NAE-satisfying
/// assignment. Clause i occupies x-block `[3i, 3i+3]`: the clause square and
/// the minority-value occurrence share `[3i+1, 3i+2]`, the two majority
/// occurrences sit at `[3i, 3i+1]+ε` and `[3i+2, 3i+3]−ε` in slot order.
pub fn build_ussvr_drawing(f: &NaeInstance, alpha: &Assignment) -> Result<Drawing, SatError> {
    if alpha.values.len() != f.n_vars {
        return Err(SatError::AssignmentWidth {
            got: alpha.values.len(),
            want: f.n_vars,
        });
    }
    let (clause_rho, rho) = ussvr_rows(f, alpha);
    let mut shapes = vec![Shape::rect(0, 1, 0, 1); 4 * f.clauses.len()];
    for (i, c) in f.clauses.iter().enumerate() {
        let vals = [alpha.get(c[0]), alpha.get(c[1]), alpha.get(c[2])];
        let trues = vals.iter().filter(|&&b| b).count();
        if trues == 0 || trues == 3 {
            return Err(SatError::NotNae(i));
        }
        let minority = trues == 1;
        let mslot = (0..3).find(|&s| vals[s] == minority).unwrap();
        let sides: Vec<usize> = (0..3).filter(|&s| s != mslot).collect();
        let bx = 3 * i as i64;
        let x_left = |s: usize| -> Coord {
            if s == mslot {
                Coord::int(bx + 1)
            } else if s == sides[0] {
                Coord::new(bx, 1)
            } else {
                Coord::new(bx + 2, -1)
            }
        };
        shapes[4 * i] = Shape::unit_square(
            Coord::int(bx + 1),
            Coord::int(2 * clause_rho),
            Coord::ONE,
        );
        for (s, &var) in c.iter().enumerate() {
            shapes[4 * i + 1 + s] =
                Shape::unit_square(x_left(s), Coord::int(2 * rho[&var]), Coord::ONE);
        }
    }
    Ok(Drawing::new(Family::UnitSquare, shapes))
}

fn gadget_hull(d: &Drawing, members: &[usize]) -> Option<Interval> {
    let mut it = members.iter();
    let first = d.shape(*it.next()?).y_projection();
    Some(it.fold(first, |acc, &v| acc.hull(&d.shape(v).y_projection())))
}

fn require_valid(d: &Drawing, idx: &GadgetIndex) -> Result<(), SatError> {
    let pair = idx.to_graph_pair();
    let report = validate_svr(d, &pair).map_err(|e| SatError::InvalidDrawing(e.to_string()))?;
    if !report.valid {
        return Err(SatError::InvalidDrawing(format!("{report:?}")));
    }
    Ok(())
}

/// Reads a NAE-satisfying assignment off any valid drawing of the instance
/// pair: a variable is true iff its consistency gadget lies entirely above
/// the clause gadget. Variables absent from the formula default to false.
pub fn decode_ussvr_assignment(d: &Drawing, idx: &GadgetIndex) -> Result<Assignment, SatError> {
    require_valid(d, idx)?;
    let mut alpha = Assignment::all_false(idx.n_vars);
    if let Some(clause_hull) = gadget_hull(d, &idx.clause_gadget()) {
        for v in idx.occurring_vars() {
            let hull = gadget_hull(d, &idx.literal_gadget(v, false))
                .expect("occurring variable has a nonempty gadget");
            if hull.overlaps(&clause_hull) {
                return Err(SatError::GadgetNotOrdered(v));
            }
            alpha.set(v, hull.lo > clause_hull.hi);
        }
    }
    let clauses = idx.clauses();
    for (i, c) in clauses.iter().enumerate() {
        let vals: Vec<bool> = c.iter().map(|&lit| alpha.lit(lit)).collect();
        if vals.iter().all(|&b| b) || vals.iter().all(|&b| !b) {
            return Err(SatError::DecodedUnsatisfiable(i));
        }
    }
    Ok(alpha)
}

// --- 3SAT → RSVR (rectangles) --------------------------------------------

/// Per clause i: vertex 7i+1 is the clause (spider root), 7i+2+s the slot-s
/// subdivision vertex carrying the literal as written, 7i+5+s the leaf
/// carrying its negation. G_H links clause vertices, and all vertices
/// standing for the same literal, into paths in appearance order.
pub fn build_rsvr_instance(f: &Cnf3Instance) -> (GraphPair, GadgetIndex) {
    let mut roles = Vec::with_capacity(7 * f.clauses.len());
    for (i, c) in f.clauses.iter().enumerate() {
        roles.push(Role::Clause { clause: i });
        for (s, &lit) in c.iter().enumerate() {
            roles.push(Role::Occurrence {
                clause: i,
                slot: s,
                var: lit.unsigned_abs() as usize,
                negated: lit < 0,
            });
        }
        for (s, &lit) in c.iter().enumerate() {
            roles.push(Role::Leaf {
                clause: i,
                slot: s,
                var: lit.unsigned_abs() as usize,
                negated: lit > 0,
            });
        }
    }
    let idx = GadgetIndex {
        kind: ReductionKind::Cnf3Rsvr,
        n_vars: f.n_vars,
        roles,
    };
    (idx.to_graph_pair(), idx)
}

/// One clause's slot arrangement: which slot plays the middle (must hold a
/// satisfied literal) and which of the other two goes to the west side.
#[derive(Clone, Copy)]
struct ClauseConfig {
    middle: usize,
    west: usize,
}

impl ClauseConfig {
    /// Left x-endpoint of the slot's subdivision rectangle within clause
    /// block `[7i, 7i+7]`; all rectangles have width 1.
    fn subdiv_x(&self, bx: i64, slot: usize) -> Coord {
        if slot == self.middle {
            Coord::int(bx + 3)
        } else if slot == self.west {
            Coord::new(bx + 1, 1)
        } else {
            Coord::new(bx + 5, -1)
        }
    }

    fn leaf_x(&self, bx: i64, slot: usize) -> Coord {
        if slot == self.middle {
            Coord::int(bx + 3)
        } else if slot == self.west {
            Coord::new(bx, 2)
        } else {
            Coord::new(bx + 6, -2)
        }
    }
}

/// Builds the explicit rectangle drawing encoding a satisfying assignment.
/// Clause i occupies x-block `[7i, 7i+7]` with the clause rectangle at
/// `[7i+2, 7i+5] × [0, 1]`; variable j's literal gadgets occupy rows
/// `[4j, 4j+1]` and `[4j+2, 4j+3]`, the satisfied literal's gadget in the
/// lower one. Within each clause a satisfied slot is routed to the middle
/// position and the remaining two to the sides, picking the first
/// arrangement whose x-order matches every consistency gadget's path order.
pub fn build_rsvr_drawing(f: &Cnf3Instance, alpha: &Assignment) -> Result<Drawing, SatError> {
    if alpha.values.len() != f.n_vars {
        return Err(SatError::AssignmentWidth {
            got: alpha.values.len(),
            want: f.n_vars,
        });
    }
    // Row of the gadget for literal `var`/`v̄ar`: the satisfied one is lower.
    let lit_row = |var: usize, negated: bool| -> i64 {
        let satisfied = alpha.get(var) != negated;
        if satisfied {
            4 * var as i64
        } else {
            4 * var as i64 + 2
        }
    };
    // Which clauses each literal gadget touches, to allow reversed x-order
    // for gadgets confined to a single clause.
    let mut gadget_clauses: BTreeMap<(usize, bool), BTreeSet<usize>> = BTreeMap::new();
    for (i, c) in f.clauses.iter().enumerate() {
        for &lit in c {
            let var = lit.unsigned_abs() as usize;
            gadget_clauses.entry((var, lit < 0)).or_default().insert(i);
            gadget_clauses.entry((var, lit > 0)).or_default().insert(i);
        }
    }
    let mut shapes = vec![Shape::rect(0, 1, 0, 1); 7 * f.clauses.len()];
    for (i, c) in f.clauses.iter().enumerate() {
        let satisfied: Vec<usize> = (0..3).filter(|&s| alpha.lit(c[s])).collect();
        if satisfied.is_empty() {
            return Err(SatError::Unsatisfied(i));
        }
        let bx = 7 * i as i64;
        let mut chosen: Option<ClauseConfig> = None;
        'search: for &middle in &satisfied {
            let rest: Vec<usize> = (0..3).filter(|&s| s != middle).collect();
            for west in [rest[0], rest[1]] {
                let cfg = ClauseConfig { middle, west };
                if clause_config_consistent(c, i, &cfg, bx, &gadget_clauses) {
                    chosen = Some(cfg);
                    break 'search;
                }
            }
        }
        let cfg = chosen.ok_or(SatError::NoClauseConfig(i))?;
        shapes[7 * i] = Shape::Rect {
            l: Coord::int(bx + 2),
            r: Coord::int(bx + 5),
            b: Coord::ZERO,
            t: Coord::ONE,
        };
        for (s, &lit) in c.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            shapes[7 * i + 1 + s] = unit_rect(cfg.subdiv_x(bx, s), lit_row(var, lit < 0));
            shapes[7 * i + 4 + s] = unit_rect(cfg.leaf_x(bx, s), lit_row(var, lit > 0));
        }
    }
    Ok(Drawing::new(Family::Rect, shapes))
}

fn unit_rect(l: Coord, row: i64) -> Shape {
    Shape::Rect {
        l,
        r: l + Coord::ONE,
        b: Coord::int(row),
        t: Coord::int(row + 1),
    }
}

/// A clause arrangement is consistent when, within each literal gadget's
/// row, the clause's members appear in slot order from west to east (or
/// east to west for a gadget confined entirely to this clause), so that the
/// realized horizontal path equals the built consistency path.
fn clause_config_consistent(
    c: &[i64; 3],
    clause: usize,
    cfg: &ClauseConfig,
    bx: i64,
    gadget_clauses: &BTreeMap<(usize, bool), BTreeSet<usize>>,
) -> bool {
    let mut groups: BTreeMap<(usize, bool), Vec<Coord>> = BTreeMap::new();
    for (s, &lit) in c.iter().enumerate() {
        let var = lit.unsigned_abs() as usize;
        groups
            .entry((var, lit < 0))
            .or_default()
            .push(cfg.subdiv_x(bx, s));
        groups
            .entry((var, lit > 0))
            .or_default()
            .push(cfg.leaf_x(bx, s));
    }
    groups.into_iter().all(|(key, xs)| {
        if xs.len() < 2 {
            return true;
        }
        let increasing = xs.windows(2).all(|w| w[0] < w[1]);
        let decreasing = xs.windows(2).all(|w| w[0] > w[1]);
        let confined = gadget_clauses[&key].len() == 1 && gadget_clauses[&key].contains(&clause);
        increasing || (decreasing && confined)
    })
}

/// Reads a satisfying assignment off any valid drawing of the instance pair
/// via the positively-arranged criterion: a variable is true iff its chain
/// runs negated gadget above variable gadget above clause gadget, or the
/// fully reversed chain. Variables absent from the formula default to false.
pub fn decode_rsvr_assignment(d: &Drawing, idx: &GadgetIndex) -> Result<Assignment, SatError> {
    require_valid(d, idx)?;
    let mut alpha = Assignment::all_false(idx.n_vars);
    if let Some(clause_hull) = gadget_hull(d, &idx.clause_gadget()) {
        for v in idx.occurring_vars() {
            let pos = gadget_hull(d, &idx.literal_gadget(v, false))
                .expect("occurring variable has a positive gadget");
            let neg = gadget_hull(d, &idx.literal_gadget(v, true))
                .expect("occurring variable has a negated gadget");
            if pos.overlaps(&neg) || pos.overlaps(&clause_hull) || neg.overlaps(&clause_hull) {
                return Err(SatError::GadgetNotOrdered(v));
            }
            let above = |a: &Interval, b: &Interval| a.lo > b.hi;
            let positively = above(&neg, &pos) && above(&pos, &clause_hull);
            let reversed = above(&clause_hull, &pos) && above(&pos, &neg);
            alpha.set(v, positively || reversed);
        }
    }
    let clauses = idx.clauses();
    for (i, c) in clauses.iter().enumerate() {
        if !c.iter().any(|&lit| alpha.lit(lit)) {
            return Err(SatError::DecodedUnsatisfiable(i));
        }
    }
    Ok(alpha)
}

// --- DIMACS --------------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("malformed header line `{0}`")]
    MalformedHeader(String),
    #[error("duplicate header line")]
    DuplicateHeader,
    #[error("bad literal token `{0}`")]
    BadLiteral(String),
    #[error("literal {0} out of range")]
    LiteralOutOfRange(i64),
    #[error("clause {clause} has {width} literals, expected 3")]
    WrongClauseWidth { clause: usize, width: usize },
    #[error("trailing literals without closing 0")]
    UnterminatedClause,
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("negative literal {0} in a monotone NAE instance")]
    NegativeLiteral(i64),
}

pub fn parse_dimacs(text: &str) -> Result<Cnf3Instance, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut lits: Vec<i64> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader);
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = (parts.len() == 4 && parts[1] == "cnf")
                .then(|| Some((parts[2].parse().ok()?, parts[3].parse().ok()?)))
                .flatten();
            header = Some(parsed.ok_or_else(|| DimacsError::MalformedHeader(line.to_string()))?);
            continue;
        }
        if header.is_none() {
            return Err(DimacsError::MissingHeader);
        }
        for tok in line.split_whitespace() {
            lits.push(
                tok.parse()
                    .map_err(|_| DimacsError::BadLiteral(tok.to_string()))?,
            );
        }
    }
    let (n_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for lit in lits {
        if lit == 0 {
            if current.len() != 3 {
                return Err(DimacsError::WrongClauseWidth {
                    clause: clauses.len(),
                    width: current.len(),
                });
            }
            clauses.push([current[0], current[1], current[2]]);
            current.clear();
        } else {
            if lit.unsigned_abs() as usize > n_vars {
                return Err(DimacsError::LiteralOutOfRange(lit));
            }
            current.push(lit);
        }
    }
    if !current.is_empty() {
        return Err(DimacsError::UnterminatedClause);
    }
    if clauses.len() != declared {
        return Err(DimacsError::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    Ok(Cnf3Instance { n_vars, clauses })
}

/// Reinterprets an all-positive CNF as a monotone NAE instance.
pub fn as_nae(c: &Cnf3Instance) -> Result<NaeInstance, DimacsError> {
    let mut clauses = Vec::with_capacity(c.clauses.len());
    for cl in &c.clauses {
        if let Some(&neg) = cl.iter().find(|&&lit| lit < 0) {
            return Err(DimacsError::NegativeLiteral(neg));
        }
        clauses.push([cl[0] as usize, cl[1] as usize, cl[2] as usize]);
    }
    Ok(NaeInstance {
        n_vars: c.n_vars,
        clauses,
    })
}
