//! Tri-state storage for triple orientations over canonical (sorted)
//! triples.
//!
//! Axioms 1, 2 and 3' are structural here: one entry per unordered triple,
//! and the ordered orientation is recovered through the permutation sign of
//! [`canonicalize`]. Only Axioms 4, 5 and 5' need real inference (see
//! [`crate::closure`]).

use crate::geom::{canonicalize, triple_count, Orientation, TripleKey};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
enum Cell {
    Unknown = 0,
    Ccw = 1,
    Cw = 2,
}

impl Cell {
    fn of(o: Orientation) -> Cell {
        match o {
            Orientation::Ccw => Cell::Ccw,
            Orientation::Cw => Cell::Cw,
        }
    }

    fn orientation(self) -> Option<Orientation> {
        match self {
            Cell::Unknown => None,
            Cell::Ccw => Some(Orientation::Ccw),
            Cell::Cw => Some(Orientation::Cw),
        }
    }
}

/// Outcome of asserting one oriented triple into a store.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssertOutcome {
    Added,
    AlreadyKnown,
    Contradiction,
}

/// Which inference rules the closure engine applies. Axioms 1, 2 and 3' are
/// always in force through canonical storage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleSet {
    pub use_axiom4: bool,
    pub use_axiom5: bool,
    pub use_axiom5_dual: bool,
}

impl RuleSet {
    /// Axioms 4, 5 and the dual 5'. The dual rule is on by default: Theorem
    /// 1's verification invokes it directly, and forward chaining on partial
    /// stores is not known to recover it from Axiom 5 alone.
    pub fn full() -> RuleSet {
        RuleSet { use_axiom4: true, use_axiom5: true, use_axiom5_dual: true }
    }

    /// Axioms 4 and 5 without the dual rule.
    pub fn no_dual() -> RuleSet {
        RuleSet { use_axiom4: true, use_axiom5: true, use_axiom5_dual: false }
    }

    /// No inference rules: Axioms 1, 2, 3 only.
    pub fn none() -> RuleSet {
        RuleSet { use_axiom4: false, use_axiom5: false, use_axiom5_dual: false }
    }

    pub fn is_empty(&self) -> bool {
        !(self.use_axiom4 || self.use_axiom5 || self.use_axiom5_dual)
    }
}

impl Default for RuleSet {
    fn default() -> RuleSet {
        RuleSet::full()
    }
}

/// Tri-state orientation table over the canonical triples of n points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleStore {
    n: usize,
    table: Vec<Cell>,
    known: usize,
}

impl TripleStore {
    /// An empty store for n points; all triples unknown.
    pub fn new(n: usize) -> TripleStore {
        TripleStore { n, table: vec![Cell::Unknown; triple_count(n)], known: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of known (non-unknown) canonical triples.
    pub fn known_count(&self) -> usize {
        self.known
    }

    /// Total number of canonical triples, C(n,3).
    pub fn capacity(&self) -> usize {
        self.table.len()
    }

    /// True iff every canonical triple is known.
    pub fn is_complete(&self) -> bool {
        self.known == self.table.len()
    }

    /// Resets all entries to unknown, keeping the allocation.
    pub fn clear(&mut self) {
        self.table.fill(Cell::Unknown);
        self.known = 0;
    }

    /// Stored orientation of a canonical triple.
    pub fn get_canonical(&self, key: TripleKey) -> Option<Orientation> {
        self.table[key.rank].orientation()
    }

    pub(crate) fn get_rank(&self, rank: usize) -> Option<Orientation> {
        self.table[rank].orientation()
    }

    /// Orientation of an ordered triple, adjusted by permutation sign.
    pub fn get_ordered(&self, a: usize, b: usize, c: usize) -> Result<Option<Orientation>> {
        let (key, sign) = canonicalize(a, b, c)?;
        Ok(self.table[key.rank].orientation().map(|o| o.with_sign(sign)))
    }

    /// True iff the ordered triple (a, b, c) is known counterclockwise.
    /// Indices must be pairwise distinct.
    #[inline]
    pub fn is_ccw(&self, a: usize, b: usize, c: usize) -> bool {
        let (key, sign) = canonicalize(a, b, c).expect("distinct indices");
        match self.table[key.rank] {
            Cell::Unknown => false,
            Cell::Ccw => sign > 0,
            Cell::Cw => sign < 0,
        }
    }

    /// Writes a canonical entry, overwriting silently; used when building
    /// full order types where no conflict is possible.
    pub(crate) fn set_canonical(&mut self, key: TripleKey, o: Orientation) {
        if self.table[key.rank] == Cell::Unknown {
            self.known += 1;
        }
        self.table[key.rank] = Cell::of(o);
    }

    /// Asserts that the ordered triple (a, b, c) has orientation o.
    ///
    /// Canonicalizes, adjusts by the permutation sign, and writes the entry
    /// if unknown. Reports agreement or contradiction otherwise.
    pub fn assert_triple(
        &mut self,
        a: usize,
        b: usize,
        c: usize,
        o: Orientation,
    ) -> Result<AssertOutcome> {
        let (key, sign) = canonicalize(a, b, c)?;
        Ok(self.assert_canonical(key.rank, o.with_sign(sign)))
    }

    /// Asserts a canonical entry by rank. The orientation is already in
    /// canonical (sorted-triple) terms.
    pub(crate) fn assert_canonical(&mut self, rank: usize, o: Orientation) -> AssertOutcome {
        match self.table[rank].orientation() {
            None => {
                self.table[rank] = Cell::of(o);
                self.known += 1;
                AssertOutcome::Added
            }
            Some(cur) if cur == o => AssertOutcome::AlreadyKnown,
            Some(_) => AssertOutcome::Contradiction,
        }
    }

    /// Iterates over known canonical triples as (key, orientation).
    pub fn known_triples(&self) -> impl Iterator<Item = (TripleKey, Orientation)> + '_ {
        self.table.iter().enumerate().filter_map(|(rank, cell)| {
            cell.orientation().map(|o| (TripleKey::unrank(rank), o))
        })
    }
}
