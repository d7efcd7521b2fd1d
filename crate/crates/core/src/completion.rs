//! Knuth–Bendix completion of tagged rewrite systems.
//!
//! Pending work is a priority queue keyed by (length of the word involved,
//! insertion sequence), so runs are deterministic. Every added rule
//! interreduces the others and has its overlaps with all active rules
//! queued. Derived rules record a cell from their lhs to their rhs.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::logged::{Step, TwoCell};
use crate::overlap::{overlaps_between, CriticalPair, OverlapKind};
use crate::rewrite::{Origin, RewriteError, RewriteSystem, RuleId, DEFAULT_MAX_STEPS};
use crate::words::Word;

#[derive(Clone, Debug)]
pub struct CompletionConfig {
    /// Stop after this many rules have been derived from critical pairs.
    pub limit: Option<usize>,
    pub max_rules: usize,
    /// Step budget for any single reduction.
    pub max_steps: usize,
    pub interreduce: bool,
    pub logged: bool,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig { limit: None, max_rules: 10_000, max_steps: DEFAULT_MAX_STEPS, interreduce: true, logged: true }
    }
}

impl CompletionConfig {
    pub fn with_limit(limit: usize) -> Self {
        CompletionConfig { limit: Some(limit), ..Self::default() }
    }
}

#[derive(Debug)]
enum Work {
    Overlap { rules: (RuleId, RuleId), positions: (usize, usize), superposition: Word, kind: OverlapKind },
    /// A removed rule, to be re-added in simplified form.
    Equation { lhs: Word, rhs: Word, cell: Option<TwoCell> },
}

#[derive(Debug)]
struct Pending {
    key: usize,
    seq: u64,
    work: Work,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        (self.key, self.seq) == (other.key, other.seq)
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.key, self.seq).cmp(&(other.key, other.seq))
    }
}

enum Stop {
    Limit,
    Error(RewriteError),
}

impl From<RewriteError> for Stop {
    fn from(e: RewriteError) -> Self {
        match e {
            RewriteError::StepBudget(_) => Stop::Limit,
            other => Stop::Error(other),
        }
    }
}

struct Completion {
    rs: RewriteSystem,
    cfg: CompletionConfig,
    queue: BinaryHeap<Reverse<Pending>>,
    seq: u64,
    replaced_by: Vec<Option<RuleId>>,
    added: usize,
}

impl Completion {
    fn push(&mut self, key: usize, work: Work) {
        self.seq += 1;
        self.queue.push(Reverse(Pending { key, seq: self.seq, work }));
    }

    fn note_rule(&mut self, id: RuleId) {
        if self.replaced_by.len() <= id.index() {
            self.replaced_by.resize(id.index() + 1, None);
        }
    }

    fn queue_overlaps(&mut self, new: RuleId) {
        let active: Vec<RuleId> = self.rs.rule_ids().to_vec();
        let mut found: Vec<CriticalPair> = Vec::new();
        for other in active {
            found.extend(overlaps_between(self.rs.rule(new), self.rs.rule(other)));
        }
        for cp in found {
            self.push_pair(cp);
        }
    }

    fn push_pair(&mut self, cp: CriticalPair) {
        let key = cp.superposition.len();
        let work =
            Work::Overlap { rules: cp.rules, positions: cp.positions, superposition: cp.superposition, kind: cp.kind };
        self.push(key, work);
    }

    /// Follows rhs-simplification replacements to the live rule.
    fn live(&self, mut id: RuleId) -> Option<RuleId> {
        while !self.rs.is_active(id) {
            id = self.replaced_by.get(id.index()).copied().flatten()?;
        }
        Some(id)
    }

    fn reduce(&self, w: &Word) -> Result<(Word, Option<TwoCell>), RewriteError> {
        if self.cfg.logged {
            let (nf, cell) = self.rs.reduce_logged(w)?;
            Ok((nf, Some(cell)))
        } else {
            Ok((self.rs.reduce(w)?, None))
        }
    }

    /// Joins `p1 ~ p2` (with `cell: p1 → p2`) or adds the oriented rule.
    fn resolve(&mut self, p1: &Word, p2: &Word, cell: Option<TwoCell>) -> Result<(), Stop> {
        let (n1, c1) = self.reduce(p1)?;
        let (n2, c2) = self.reduce(p2)?;
        if n1 == n2 {
            return Ok(());
        }
        let joined = match (c1, cell, c2) {
            (Some(c1), Some(cell), Some(c2)) => Some((c1, cell, c2)),
            _ => None,
        };
        match self.rs.order().compare_words(&n1, &n2) {
            Ordering::Greater => {
                let log = joined.map(|(c1, cell, c2)| {
                    c1.invert().compose(&cell).and_then(|x| x.compose(&c2)).expect("cells chain through the pair")
                });
                self.add_rule(n1, n2, log)
            }
            Ordering::Less => {
                let log = joined.map(|(c1, cell, c2)| {
                    c2.invert().compose(&cell.invert()).and_then(|x| x.compose(&c1)).expect("cells chain through the pair")
                });
                self.add_rule(n2, n1, log)
            }
            Ordering::Equal => Err(Stop::Error(RewriteError::Unorientable {
                lhs: self.rs.alphabet().render(&n1),
                rhs: self.rs.alphabet().render(&n2),
            })),
        }
    }

    fn add_rule(&mut self, lhs: Word, rhs: Word, log: Option<TwoCell>) -> Result<(), Stop> {
        let name = self.rs.fresh_name(lhs.tag_class());
        let id = self.rs.push_rule(lhs, rhs, Origin::Derived, log, name);
        self.note_rule(id);
        self.added += 1;
        if self.cfg.interreduce {
            self.interreduce_with(id)?;
        }
        self.queue_overlaps(id);
        if self.cfg.limit.is_some_and(|l| self.added >= l) || self.rs.len() > self.cfg.max_rules {
            return Err(Stop::Limit);
        }
        Ok(())
    }

    fn removal_cell(&self, id: RuleId) -> Option<TwoCell> {
        let r = self.rs.rule(id);
        self.cfg.logged.then(|| {
            let step = Step { rule: id, inverted: false, left: Word::empty(), right: Word::empty() };
            TwoCell::from_parts(r.lhs.clone(), r.rhs.clone(), vec![step])
        })
    }

    /// Simplifies every other active rule by `new`: a rule whose lhs it
    /// reduces is removed and requeued as an equation; a rule whose rhs it
    /// reduces is replaced by one with a normal-form rhs.
    fn interreduce_with(&mut self, new: RuleId) -> Result<(), Stop> {
        let new_lhs = self.rs.rule(new).lhs.clone();
        let others: Vec<RuleId> = self.rs.rule_ids().iter().copied().filter(|&r| r != new).collect();
        for id in others {
            if !self.rs.is_active(id) {
                continue;
            }
            let (lhs, rhs) = {
                let r = self.rs.rule(id);
                (r.lhs.clone(), r.rhs.clone())
            };
            if lhs.contains_factor(&new_lhs) {
                let cell = self.removal_cell(id);
                self.rs.deactivate(id);
                self.push(lhs.len(), Work::Equation { lhs, rhs, cell });
            } else if rhs.contains_factor(&new_lhs) {
                self.simplify_rhs(id)?;
            }
        }
        Ok(())
    }

    fn simplify_rhs(&mut self, id: RuleId) -> Result<(), Stop> {
        let (lhs, rhs) = {
            let r = self.rs.rule(id);
            (r.lhs.clone(), r.rhs.clone())
        };
        let (nf, c) = self.reduce(&rhs)?;
        let log = match (self.removal_cell(id), c) {
            (Some(first), Some(c)) => Some(first.compose(&c).expect("rule cell ends at its rhs")),
            _ => None,
        };
        let name = self.rs.fresh_name(lhs.tag_class());
        let new = self.rs.push_rule(lhs, nf, Origin::Derived, log, name);
        self.note_rule(new);
        self.replaced_by[id.index()] = Some(new);
        self.rs.replace_active(id, new);
        Ok(())
    }

    /// Removes or simplifies rules made redundant by the others.
    fn initial_interreduction(&mut self) -> Result<(), Stop> {
        let ids: Vec<RuleId> = self.rs.rule_ids().to_vec();
        for &id in &ids {
            if !self.rs.is_active(id) {
                continue;
            }
            let lhs = self.rs.rule(id).lhs.clone();
            let shadowed = self.rs.rules().any(|r| r.id != id && lhs.contains_factor(&r.lhs));
            if shadowed {
                let rhs = self.rs.rule(id).rhs.clone();
                let cell = self.removal_cell(id);
                self.rs.deactivate(id);
                self.push(lhs.len(), Work::Equation { lhs, rhs, cell });
            }
        }
        for id in self.rs.rule_ids().to_vec() {
            if self.rs.is_active(id) && !self.rs.is_irreducible(&self.rs.rule(id).rhs.clone()) {
                self.simplify_rhs(id)?;
            }
        }
        Ok(())
    }

    fn process(&mut self, work: Work) -> Result<(), Stop> {
        match work {
            Work::Equation { lhs, rhs, cell } => self.resolve(&lhs, &rhs, cell),
            Work::Overlap { rules, positions, superposition, kind } => {
                let (Some(r1), Some(r2)) = (self.live(rules.0), self.live(rules.1)) else {
                    return Ok(());
                };
                let p1 = self.rs.apply_at(&superposition, positions.0, r1);
                let p2 = self.rs.apply_at(&superposition, positions.1, r2);
                let cell = self.cfg.logged.then(|| {
                    CriticalPair {
                        superposition: superposition.clone(),
                        left: p1.clone(),
                        right: p2.clone(),
                        rules: (r1, r2),
                        kind,
                        positions,
                    }
                    .cell(&self.rs)
                });
                self.resolve(&p1, &p2, cell)
            }
        }
    }

    fn run(&mut self) -> Result<(), Stop> {
        if self.cfg.interreduce {
            self.initial_interreduction()?;
        }
        let ids: Vec<RuleId> = self.rs.rule_ids().to_vec();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i..] {
                if !self.rs.is_active(a) || !self.rs.is_active(b) {
                    continue;
                }
                for cp in overlaps_between(self.rs.rule(a), self.rs.rule(b)) {
                    self.push_pair(cp);
                }
            }
        }
        while let Some(Reverse(p)) = self.queue.pop() {
            self.process(p.work)?;
        }
        Ok(())
    }
}

/// Completes `rs`. On success the result is flagged complete; when the
/// rule limit or a budget is hit the partial system is returned flagged
/// `limit_reached`. Every rule of the result is a consequence of the input.
pub fn knuth_bendix(rs: RewriteSystem, cfg: &CompletionConfig) -> Result<RewriteSystem, RewriteError> {
    let mut rs = rs;
    rs.set_max_steps(cfg.max_steps);
    rs.complete = false;
    rs.limit_reached = false;
    let n = rs.archive().len();
    let mut c = Completion {
        rs,
        cfg: cfg.clone(),
        queue: BinaryHeap::new(),
        seq: 0,
        replaced_by: vec![None; n],
        added: 0,
    };
    match c.run() {
        Ok(()) => c.rs.complete = true,
        Err(Stop::Limit) => c.rs.limit_reached = true,
        Err(Stop::Error(e)) => return Err(e),
    }
    c.rs.renumber_derived();
    Ok(c.rs)
}

/// [`knuth_bendix`] with logging forced on, so every derived rule carries
/// a cell from its lhs to its rhs.
pub fn logged_knuth_bendix(rs: RewriteSystem, cfg: &CompletionConfig) -> Result<RewriteSystem, RewriteError> {
    let cfg = CompletionConfig { logged: true, ..cfg.clone() };
    knuth_bendix(rs, &cfg)
}

/// Flags a system read from text as complete when every critical pair
/// joins. Its rules decrease in a well-founded order, so local confluence
/// is enough.
pub fn confirm_complete(rs: &mut RewriteSystem) -> Result<bool, RewriteError> {
    let ok = check_local_confluence(rs)?.is_empty();
    rs.complete = ok;
    Ok(ok)
}

/// Critical pairs of active rules whose reducts do not join.
pub fn check_local_confluence(rs: &RewriteSystem) -> Result<Vec<CriticalPair>, RewriteError> {
    let ids = rs.rule_ids();
    let mut out = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i..] {
            for cp in overlaps_between(rs.rule(a), rs.rule(b)) {
                if rs.reduce(&cp.left)? != rs.reduce(&cp.right)? {
                    out.push(cp);
                }
            }
        }
    }
    Ok(out)
}
