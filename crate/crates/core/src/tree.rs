//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Every semigroup of genus `g + 1` arises exactly once from a semigroup of
//! genus `g` by removing one minimal generator larger than the Frobenius
//! number. Walking that tree depth-first visits every semigroup of genus
//! `<= G` exactly once.
//!
//! Nodes keep a fixed-size table `decs[x]`, the number of unordered pairs
//! `{a, b}` of members with `a + b = x`. A member is a minimal generator iff
//! `decs[x] == 1` (only `{0, x}`), and removing a generator `x` only needs one
//! pass over `decs[x..]`. No heap allocation happens per node.
//!
//! The tree is badly unbalanced (almost every node of genus 30 sits below a
//! single genus-6 node), so parallel runs fork at every node that is far from
//! `genus_max` rather than at one fixed depth. Every task gets a fresh
//! visitor; results are merged in child order, so counts and merged output
//! do not depend on the worker count.

use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{GapList, Semigroup};

const SLOTS: usize = 128;

/// Largest genus the fixed-width node tables support (`3g + 1 < 128`).
pub const MAX_TREE_GENUS: u32 = 40;

pub const DEFAULT_SERIAL_DEPTH: u32 = 8;

/// A node of the semigroup tree.
#[derive(Clone)]
pub struct TreeNode {
    decs: [u8; SLOTS],
    genus: u32,
    conductor: u32,
    multiplicity: u32,
}

impl TreeNode {
    pub fn root() -> Self {
        let mut decs = [0u8; SLOTS];
        for (x, d) in decs.iter_mut().enumerate() {
            *d = (x / 2 + 1) as u8;
        }
        TreeNode {
            decs,
            genus: 0,
            conductor: 0,
            multiplicity: 1,
        }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x as usize >= SLOTS || self.decs[x as usize] > 0
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn frobenius(&self) -> i64 {
        i64::from(self.conductor) - 1
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Minimal generators larger than the Frobenius number, increasing.
    pub fn effective_generators(&self) -> impl Iterator<Item = u32> + '_ {
        let lo = self.conductor.max(1);
        let hi = (self.conductor + self.multiplicity).max(2);
        (lo..hi).filter(move |&x| self.decs[x as usize] == 1)
    }

    /// The child obtained by removing the effective generator `x`.
    pub fn child(&self, x: u32) -> TreeNode {
        debug_assert_eq!(self.decs[x as usize], 1);
        let x = x as usize;
        let mut decs = self.decs;
        for (d, &src) in decs[x..].iter_mut().zip(self.decs.iter()) {
            if src > 0 {
                *d -= 1;
            }
        }
        TreeNode {
            decs,
            genus: self.genus + 1,
            conductor: x as u32 + 1,
            multiplicity: if x as u32 == self.multiplicity {
                x as u32 + 1
            } else {
                self.multiplicity
            },
        }
    }

    pub fn gap_iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.conductor).filter(move |&x| self.decs[x as usize] == 0)
    }

    pub fn gaps(&self) -> GapList {
        GapList::new_unchecked(self.gap_iter().collect())
    }

    pub fn to_semigroup(&self) -> Semigroup {
        let members: Vec<bool> = (0..=self.conductor).map(|x| self.contains(x)).collect();
        Semigroup::from_membership(&members)
    }

    /// Certificate test straight on the node table.
    pub fn is_gamma_hyperelliptic(&self, gamma: u32) -> bool {
        let evens = (2..=4 * gamma).step_by(2).filter(|&x| self.contains(x)).count();
        if evens != gamma as usize {
            return false;
        }
        (1..).filter(|&x| self.contains(x)).nth(gamma as usize) == Some(4 * gamma + 2)
    }
}

/// All minimal generators of `s`.
pub fn minimal_generators(s: &Semigroup) -> Vec<u32> {
    let hi = (s.conductor() + s.multiplicity()).max(2);
    (1..hi)
        .filter(|&x| s.contains(x))
        .filter(|&x| !(1..=x / 2).any(|a| s.contains(a) && s.contains(x - a)))
        .collect()
}

/// Per-subtree visitor. One instance is created per task and merged in
/// subtree order.
pub trait Visitor: Send + Sized {
    fn visit(&mut self, node: &TreeNode);
    fn merge(&mut self, other: Self);
}

/// Discards every node; enumeration statistics still count them.
#[derive(Debug, Default)]
pub struct NullVisitor;

impl Visitor for NullVisitor {
    fn visit(&mut self, _: &TreeNode) {}
    fn merge(&mut self, _: Self) {}
}

/// Collects gap sets in visit order.
#[derive(Debug, Default)]
pub struct GapSetCollector(pub Vec<GapList>);

impl Visitor for GapSetCollector {
    fn visit(&mut self, node: &TreeNode) {
        self.0.push(node.gaps());
    }
    fn merge(&mut self, other: Self) {
        self.0.extend(other.0);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Worker threads; 0 means one per available core.
    pub threads: usize,
    /// Subtrees reaching at most this many levels below their root (before
    /// `genus_max`) are walked serially as one task; shallower nodes fork
    /// one task per child.
    pub serial_depth: u32,
    /// Gammas whose gamma-hyperelliptic nodes are tallied per genus.
    pub gammas: Vec<u32>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            threads: 1,
            serial_depth: DEFAULT_SERIAL_DEPTH,
            gammas: Vec::new(),
        }
    }
}

impl EnumerationOptions {
    pub fn with_threads(threads: usize) -> Self {
        EnumerationOptions {
            threads,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub genus_max: u32,
    /// Visited semigroups per genus.
    pub counts: Vec<u64>,
    /// Per requested gamma, gamma-hyperelliptic semigroups per genus.
    pub gamma_counts: BTreeMap<u32, Vec<u64>>,
    /// Nodes expanded, including pruned-away visits.
    pub nodes: u64,
    pub tasks: usize,
    pub threads: usize,
    pub elapsed_secs: f64,
    pub nodes_per_sec: f64,
}

impl EnumerationStats {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Decides which nodes the visitor sees and which subtrees are worth entering.
trait Walk: Sync {
    fn accept(&self, node: &TreeNode) -> bool;
    fn descend(&self, node: &TreeNode) -> bool;
}

struct Everything;

impl Walk for Everything {
    fn accept(&self, _: &TreeNode) -> bool {
        true
    }
    fn descend(&self, _: &TreeNode) -> bool {
        true
    }
}

/// Gamma filter with subtree pruning.
///
/// Descendants only remove elements above the current Frobenius number, so
/// membership of every `x < conductor` is final. A subtree is cut when that
/// frozen prefix already rules the certificate out.
struct GammaWalk {
    gamma: u32,
    genus_lo: u32,
}

impl Walk for GammaWalk {
    fn accept(&self, node: &TreeNode) -> bool {
        node.genus >= self.genus_lo && node.is_gamma_hyperelliptic(self.gamma)
    }

    fn descend(&self, node: &TreeNode) -> bool {
        could_become_gamma_hyperelliptic(node, self.gamma)
    }
}

/// `false` only when no descendant of `node` can be gamma-hyperelliptic.
pub fn could_become_gamma_hyperelliptic(node: &TreeNode, gamma: u32) -> bool {
    let pivot = 4 * gamma + 2;
    let frozen = |x: u32| x < node.conductor;
    for x in (1..pivot).step_by(2) {
        if frozen(x) && node.contains(x) {
            return false;
        }
    }
    if frozen(pivot) && !node.contains(pivot) {
        return false;
    }
    let mut fixed = 0;
    let mut current = 0;
    for x in (2..=4 * gamma).step_by(2) {
        if node.contains(x) {
            current += 1;
            if frozen(x) {
                fixed += 1;
            }
        }
    }
    fixed <= gamma && gamma <= current
}

struct Tally {
    counts: Vec<u64>,
    gamma_counts: Vec<Vec<u64>>,
    nodes: u64,
}

impl Tally {
    fn new(genus_max: u32, gammas: usize) -> Self {
        let n = genus_max as usize + 1;
        Tally {
            counts: vec![0; n],
            gamma_counts: vec![vec![0; n]; gammas],
            nodes: 0,
        }
    }

    fn add(&mut self, other: &Tally) {
        self.nodes += other.nodes;
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        for (ga, gb) in self.gamma_counts.iter_mut().zip(&other.gamma_counts) {
            for (a, b) in ga.iter_mut().zip(gb) {
                *a += b;
            }
        }
    }
}

struct Ctx<'a, W> {
    genus_max: u32,
    serial_depth: u32,
    walk: &'a W,
    gammas: &'a [u32],
    parallel: bool,
}

impl<W: Walk> Ctx<'_, W> {
    fn record<V: Visitor>(&self, node: &TreeNode, visitor: &mut V, tally: &mut Tally) {
        tally.nodes += 1;
        if self.walk.accept(node) {
            visitor.visit(node);
            tally.counts[node.genus as usize] += 1;
            for (i, &gamma) in self.gammas.iter().enumerate() {
                if node.is_gamma_hyperelliptic(gamma) {
                    tally.gamma_counts[i][node.genus as usize] += 1;
                }
            }
        }
    }

    fn dfs<V: Visitor>(&self, node: &TreeNode, visitor: &mut V, tally: &mut Tally) {
        self.record(node, visitor, tally);
        if node.genus >= self.genus_max {
            return;
        }
        for x in node.effective_generators() {
            let child = node.child(x);
            if self.walk.descend(&child) {
                self.dfs(&child, visitor, tally);
            }
        }
    }

    /// Fork-join walk: nodes more than `serial_depth` levels above
    /// `genus_max` hand each child subtree to its own task. Results are
    /// merged in child order whether or not the tasks ran in parallel.
    fn split<V, F>(&self, node: &TreeNode, init: &F) -> (V, Tally, usize)
    where
        V: Visitor,
        F: Fn() -> V + Sync,
    {
        let mut visitor = init();
        let mut tally = Tally::new(self.genus_max, self.gammas.len());
        if self.genus_max - node.genus <= self.serial_depth {
            self.dfs(node, &mut visitor, &mut tally);
            return (visitor, tally, 1);
        }
        self.record(node, &mut visitor, &mut tally);
        let children: Vec<TreeNode> = node
            .effective_generators()
            .map(|x| node.child(x))
            .filter(|c| self.walk.descend(c))
            .collect();
        let results: Vec<(V, Tally, usize)> = if self.parallel {
            use rayon::prelude::*;
            children.par_iter().map(|c| self.split(c, init)).collect()
        } else {
            children.iter().map(|c| self.split(c, init)).collect()
        };
        let mut tasks = 0;
        for (v, t, n) in results {
            visitor.merge(v);
            tally.add(&t);
            tasks += n;
        }
        (visitor, tally, tasks)
    }
}

fn check_genus(genus_max: u32) -> Result<()> {
    if genus_max > MAX_TREE_GENUS {
        return Err(Error::GenusTooLarge {
            requested: genus_max,
            max: MAX_TREE_GENUS,
        });
    }
    Ok(())
}

fn run<V, F, W>(genus_max: u32, opts: &EnumerationOptions, walk: &W, init: F) -> Result<(V, EnumerationStats)>
where
    V: Visitor,
    F: Fn() -> V + Sync,
    W: Walk,
{
    check_genus(genus_max)?;
    let start = Instant::now();
    let threads = if opts.threads == 0 {
        rayon::current_num_threads()
    } else {
        opts.threads
    };
    let ctx = Ctx {
        genus_max,
        serial_depth: opts.serial_depth,
        walk,
        gammas: &opts.gammas,
        parallel: threads > 1,
    };

    let root = TreeNode::root();
    let (visitor, tally, tasks) = if !walk.descend(&root) {
        (init(), Tally::new(genus_max, opts.gammas.len()), 0)
    } else if ctx.parallel {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build worker pool");
        pool.install(|| ctx.split(&root, &init))
    } else {
        ctx.split(&root, &init)
    };

    let elapsed_secs = start.elapsed().as_secs_f64();
    let stats = EnumerationStats {
        genus_max,
        counts: tally.counts,
        gamma_counts: opts.gammas.iter().copied().zip(tally.gamma_counts).collect(),
        nodes: tally.nodes,
        tasks,
        threads,
        elapsed_secs,
        nodes_per_sec: if elapsed_secs > 0.0 {
            tally.nodes as f64 / elapsed_secs
        } else {
            0.0
        },
    };
    Ok((visitor, stats))
}

/// Visits every numerical semigroup of genus `<= genus_max` exactly once.
pub fn enumerate<V, F>(genus_max: u32, opts: &EnumerationOptions, init: F) -> Result<(V, EnumerationStats)>
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    run(genus_max, opts, &Everything, init)
}

/// Single-threaded depth-first walk with a closure.
pub fn for_each_semigroup(genus_max: u32, mut f: impl FnMut(&TreeNode)) -> Result<()> {
    check_genus(genus_max)?;
    fn go(node: &TreeNode, genus_max: u32, f: &mut impl FnMut(&TreeNode)) {
        f(node);
        if node.genus < genus_max {
            for x in node.effective_generators() {
                go(&node.child(x), genus_max, f);
            }
        }
    }
    go(&TreeNode::root(), genus_max, &mut f);
    Ok(())
}

/// Visits exactly the gamma-hyperelliptic semigroups of the given genus.
pub fn enumerate_gamma_hyperelliptic<V, F>(
    gamma: u32,
    genus: u32,
    opts: &EnumerationOptions,
    init: F,
) -> Result<(V, EnumerationStats)>
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    run(genus, opts, &GammaWalk { gamma, genus_lo: genus }, init)
}

/// Visits the gamma-hyperelliptic semigroups of every genus `<= genus_max`.
pub fn enumerate_gamma_hyperelliptic_up_to<V, F>(
    gamma: u32,
    genus_max: u32,
    opts: &EnumerationOptions,
    init: F,
) -> Result<(V, EnumerationStats)>
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    run(genus_max, opts, &GammaWalk { gamma, genus_lo: 0 }, init)
}

pub const BRUTE_FORCE_MAX_GENUS: u32 = 12;

/// Every `genus`-subset of `[1, 2 genus - 1]` whose complement is closed,
/// in lexicographic order of gap sets. Independent of the tree walk.
pub fn brute_force_enumerate(genus: u32) -> Result<Vec<Semigroup>> {
    if genus > BRUTE_FORCE_MAX_GENUS {
        return Err(Error::InvalidParameters {
            reason: format!("brute force is limited to genus <= {BRUTE_FORCE_MAX_GENUS}"),
        });
    }
    if genus == 0 {
        return Ok(vec![Semigroup::naturals()]);
    }
    Ok((1..2 * genus)
        .combinations(genus as usize)
        .filter_map(|gaps| Semigroup::from_gaps(&gaps).ok())
        .collect())
}
