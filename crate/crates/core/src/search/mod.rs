//! Exhaustive enumeration of BCK-algebras of a fixed small order.
//!
//! The engine fills Cayley tables cell by cell in row-major order
//! ([`PartialTable`]), rejecting a branch as soon as a fully determined
//! axiom instance fails. Complete tables are certified, filtered, and (when
//! requested) reduced to canonical form to deduplicate isomorphic copies.
//!
//! Parallelism splits the search tree at the first few free cells into at
//! least `4 × worker_count` independent subtrees. Results are merged into a
//! sorted set, so the outcome does not depend on the number of workers or
//! on scheduling.

mod filter;
mod partial;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{validate, BckAlgebra};
use crate::canonical::canonical_form;
use crate::sequences::{find_nonprolongable_pair, DepthReport};
use crate::table::CayleyTable;

pub use filter::{Filter, FilterParseError};
pub use partial::{PartialTable, Rejection, MAX_SEARCH_ORDER};

/// Orders above this need [`SearchConfig::allow_above_ceiling`].
pub const DEFAULT_CEILING: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {order} is above the search ceiling {ceiling}; pass an explicit override")]
    AboveCeiling { order: usize, ceiling: usize },
    #[error("order {0} exceeds the largest supported search order {MAX_SEARCH_ORDER}")]
    Unsupported(usize),
    #[error("result limit must be at least 1")]
    ZeroLimit,
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub order: usize,
    pub filter: Filter,
    pub up_to_iso: bool,
    pub limit: Option<usize>,
    pub worker_count: usize,
    pub ceiling: usize,
    pub allow_above_ceiling: bool,
}

impl SearchConfig {
    /// All algebras of `order`, labeled, on one worker.
    pub fn new(order: usize) -> Self {
        SearchConfig {
            order,
            filter: Filter::All,
            up_to_iso: false,
            limit: None,
            worker_count: 1,
            ceiling: DEFAULT_CEILING,
            allow_above_ceiling: false,
        }
    }

    pub fn filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn up_to_iso(mut self, yes: bool) -> Self {
        self.up_to_iso = yes;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.worker_count = n;
        self
    }

    pub fn allow_above_ceiling(mut self, yes: bool) -> Self {
        self.allow_above_ceiling = yes;
        self
    }

    fn check(&self) -> Result<(), SearchError> {
        if self.order == 0 {
            return Err(SearchError::ZeroOrder);
        }
        if self.order > MAX_SEARCH_ORDER {
            return Err(SearchError::Unsupported(self.order));
        }
        if self.order > self.ceiling && !self.allow_above_ceiling {
            return Err(SearchError::AboveCeiling { order: self.order, ceiling: self.ceiling });
        }
        if self.limit == Some(0) {
            return Err(SearchError::ZeroLimit);
        }
        if self.worker_count == 0 {
            return Err(SearchError::ZeroWorkers);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct SearchStats {
    /// Accepted cell assignments, counting the root once.
    pub nodes_expanded: u64,
    /// Complete tables reached and certified.
    pub tables_validated: u64,
    /// Complete tables accepted by the filter (labeled count).
    pub tables_passing: u64,
    pub wall_seconds: f64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes_expanded += other.nodes_expanded;
        self.tables_validated += other.tables_validated;
        self.tables_passing += other.tables_passing;
    }

    /// One-line human-readable summary.
    pub fn summary(&self) -> String {
        format!(
            "{} nodes, {} tables validated, {} passing filter, {:.3}s",
            self.nodes_expanded, self.tables_validated, self.tables_passing, self.wall_seconds
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    /// Sorted ascending in row-major order; canonical forms when searching
    /// up to isomorphism.
    pub algebras: Vec<CayleyTable>,
    pub stats: SearchStats,
}

/// Enumerates the algebras selected by `config`.
pub fn enumerate(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    config.check()?;
    let start = Instant::now();
    let (mut found, mut stats) = explore(config, |a| {
        if !config.filter.accepts(a) {
            return None;
        }
        Some(if config.up_to_iso { canonical_form(a) } else { a.table().clone() })
    })?;
    if let Some(limit) = config.limit {
        found.truncate(limit);
    }
    stats.wall_seconds = start.elapsed().as_secs_f64();
    Ok(SearchOutcome { algebras: found, stats })
}

/// Walks the search tree in parallel, mapping each certified leaf through
/// `visit` and collecting the distinct results in sorted order.
fn explore<R, F>(config: &SearchConfig, visit: F) -> Result<(Vec<R>, SearchStats), SearchError>
where
    R: Ord + Send,
    F: Fn(&BckAlgebra) -> Option<R> + Sync,
{
    let (frontier, mut stats) = split(config.order, 4 * config.worker_count);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    let parts: Vec<(BTreeSet<R>, SearchStats)> = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|mut p| {
                let mut out = BTreeSet::new();
                let mut s = SearchStats::default();
                descend(&mut p, &visit, &mut out, &mut s);
                (out, s)
            })
            .collect()
    });
    let mut merged = BTreeSet::new();
    for (part, s) in parts {
        stats.absorb(&s);
        merged.extend(part);
    }
    Ok((merged.into_iter().collect(), stats))
}

/// Expands the tree breadth-first until there are at least `target`
/// subtrees or nothing left to expand.
fn split(order: usize, target: usize) -> (Vec<PartialTable>, SearchStats) {
    let mut stats = SearchStats { nodes_expanded: 1, ..Default::default() };
    let mut frontier = vec![PartialTable::new(order)];
    while frontier.len() < target && frontier.iter().any(|p| !p.is_complete()) {
        let mut next = Vec::new();
        for p in frontier {
            let Some(cell) = p.cursor_cell() else {
                next.push(p);
                continue;
            };
            for v in 0..order {
                if let Ok(q) = p.prune_and_fill(cell, v) {
                    stats.nodes_expanded += 1;
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    (frontier, stats)
}

fn descend<R, F>(p: &mut PartialTable, visit: &F, out: &mut BTreeSet<R>, stats: &mut SearchStats)
where
    R: Ord,
    F: Fn(&BckAlgebra) -> Option<R>,
{
    if p.is_complete() {
        let table = p.to_table();
        stats.tables_validated += 1;
        let a = match validate(&table) {
            Ok(a) => a,
            Err(e) => panic!("search reached a table that is not a BCK-algebra: {e}\n{table}"),
        };
        if let Some(r) = visit(&a) {
            stats.tables_passing += 1;
            out.insert(r);
        }
        return;
    }
    for v in 0..p.order() {
        if p.assign(v).is_ok() {
            stats.nodes_expanded += 1;
            descend(p, visit, out, stats);
            p.undo();
        }
    }
}

/// An algebra with a pair whose chains cannot be prolonged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Canonical form.
    pub table: CayleyTable,
    /// First failing pair in row-major order of the canonical labeling.
    pub witness: DepthReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonProlongableOutcome {
    pub found: Vec<Counterexample>,
    pub stats: SearchStats,
}

/// All algebras of `order`, up to isomorphism, that have a pair with
/// non-prolongable chains.
pub fn find_nonprolongable(order: usize, limit: Option<usize>, workers: usize) -> Result<NonProlongableOutcome, SearchError> {
    let config = SearchConfig::new(order)
        .filter(Filter::NonProlongable)
        .up_to_iso(true)
        .limit(limit)
        .workers(workers);
    let outcome = enumerate(&config)?;
    let found = outcome
        .algebras
        .into_iter()
        .map(|table| {
            let a = validate(&table).expect("search output is certified");
            let witness = find_nonprolongable_pair(&a).expect("filter guarantees a failing pair");
            Counterexample { table, witness }
        })
        .collect();
    Ok(NonProlongableOutcome { found, stats: outcome.stats })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub order: usize,
    pub labeled: u64,
    pub up_to_iso: usize,
}

/// Counts of algebras of each order `1..=max_order`, labeled and up to
/// isomorphism.
pub fn census(max_order: usize, workers: usize) -> Result<Vec<CensusRow>, SearchError> {
    (1..=max_order)
        .map(|order| {
            let config = SearchConfig::new(order).up_to_iso(true).workers(workers);
            config.check()?;
            let (forms, stats) = explore(&config, |a| Some(canonical_form(a)))?;
            Ok(CensusRow { order, labeled: stats.tables_passing, up_to_iso: forms.len() })
        })
        .collect()
}
