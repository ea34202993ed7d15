//! State elimination from an NFA to an equivalent plain regular expression.
//!
//! Intermediate labels live in a hash-consed arena so that shared
//! subexpressions cost nothing and the RPN size of the result is known
//! without building the tree. States are eliminated in ascending order of
//! in-degree × out-degree (self-loops excluded), ties broken by state id.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::Nfa;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex};

type NodeId = u32;

const EMPTY: NodeId = 0;
const EPS: NodeId = 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Node {
    Empty,
    Eps,
    Sym(usize),
    Concat(NodeId, NodeId),
    Union(NodeId, NodeId),
    Star(NodeId),
}

#[derive(Debug)]
struct Arena {
    nodes: Vec<Node>,
    sizes: Vec<u64>,
    dedup: HashMap<Node, NodeId>,
    limit: usize,
}

impl Arena {
    fn new(limit: usize) -> Arena {
        let mut a = Arena {
            nodes: Vec::new(),
            sizes: Vec::new(),
            dedup: HashMap::new(),
            limit,
        };
        a.intern(Node::Empty).unwrap();
        a.intern(Node::Eps).unwrap();
        a
    }

    fn intern(&mut self, node: Node) -> Result<NodeId> {
        if let Some(&id) = self.dedup.get(&node) {
            return Ok(id);
        }
        if self.nodes.len() >= self.limit {
            return Err(Error::BudgetExceeded {
                what: "expression nodes",
                limit: self.limit,
            });
        }
        let size = match node {
            Node::Empty | Node::Eps | Node::Sym(_) => 1,
            Node::Star(a) => self.sizes[a as usize].saturating_add(1),
            Node::Concat(a, b) | Node::Union(a, b) => self.sizes[a as usize]
                .saturating_add(self.sizes[b as usize])
                .saturating_add(1),
        };
        let id = self.nodes.len() as NodeId;
        self.nodes.push(node);
        self.sizes.push(size);
        self.dedup.insert(node, id);
        Ok(id)
    }

    fn sym(&mut self, s: usize) -> Result<NodeId> {
        self.intern(Node::Sym(s))
    }

    fn concat(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        match (a, b) {
            (EMPTY, _) | (_, EMPTY) => Ok(EMPTY),
            (EPS, x) | (x, EPS) => Ok(x),
            _ => self.intern(Node::Concat(a, b)),
        }
    }

    fn union(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        match (a, b) {
            (EMPTY, x) | (x, EMPTY) => Ok(x),
            _ if a == b => Ok(a),
            _ => self.intern(Node::Union(a, b)),
        }
    }

    fn star(&mut self, a: NodeId) -> Result<NodeId> {
        match self.nodes[a as usize] {
            Node::Empty | Node::Eps => Ok(EPS),
            Node::Star(_) => Ok(a),
            Node::Union(EPS, x) | Node::Union(x, EPS) => self.star(x),
            _ => self.intern(Node::Star(a)),
        }
    }
}

/// Result of state elimination: a shared expression DAG plus its root.
#[derive(Debug)]
pub struct Eliminated {
    arena: Arena,
    root: NodeId,
    alphabet: Alphabet,
}

impl Eliminated {
    /// RPN size of the expression tree (saturating at `u64::MAX`).
    pub fn size(&self) -> u64 {
        self.arena.sizes[self.root as usize]
    }

    /// Expands the DAG into a tree.
    pub fn to_regex(&self) -> Regex {
        let mut memo: HashMap<NodeId, Regex> = HashMap::new();
        self.build(self.root, &mut memo)
    }

    /// Expands only when the tree has at most `max_size` nodes.
    pub fn to_regex_within(&self, max_size: u64) -> Option<Regex> {
        (self.size() <= max_size).then(|| self.to_regex())
    }

    fn build(&self, id: NodeId, memo: &mut HashMap<NodeId, Regex>) -> Regex {
        if let Some(r) = memo.get(&id) {
            return r.clone();
        }
        let r = match self.arena.nodes[id as usize] {
            Node::Empty => Regex::Empty,
            Node::Eps => Regex::Epsilon,
            Node::Sym(s) => Regex::Sym(self.alphabet.get(s).clone()),
            Node::Concat(a, b) => Regex::concat(self.build(a, memo), self.build(b, memo)),
            Node::Union(a, b) => Regex::union(self.build(a, memo), self.build(b, memo)),
            Node::Star(a) => Regex::star(self.build(a, memo)),
        };
        memo.insert(id, r.clone());
        r
    }
}

/// Regular expression for `L(a)`, without negation, intersection or `+`.
pub fn eliminate_states(a: &Nfa) -> Regex {
    let mut budget = Budget::default();
    budget.max_expr_nodes = usize::MAX;
    eliminate_states_with(a, &budget)
        .expect("unbounded elimination")
        .to_regex()
}

pub fn eliminate_states_with(a: &Nfa, budget: &Budget) -> Result<Eliminated> {
    let a = a.trim();
    let n = a.num_states();
    let mut arena = Arena::new(budget.max_expr_nodes);
    // generalized automaton: original states 0..n, source n, sink n+1
    let (source, sink) = (n, n + 1);
    let mut out: Vec<BTreeMap<usize, NodeId>> = vec![BTreeMap::new(); n + 2];
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 2];
    let add = |arena: &mut Arena,
                   out: &mut Vec<BTreeMap<usize, NodeId>>,
                   inc: &mut Vec<BTreeSet<usize>>,
                   p: usize,
                   q: usize,
                   label: NodeId|
     -> Result<()> {
        if label == EMPTY {
            return Ok(());
        }
        let merged = match out[p].get(&q) {
            Some(&old) => arena.union(old, label)?,
            None => label,
        };
        out[p].insert(q, merged);
        inc[q].insert(p);
        Ok(())
    };
    for (p, s, q) in a.transitions() {
        let l = arena.sym(s)?;
        add(&mut arena, &mut out, &mut inc, p, q, l)?;
    }
    add(&mut arena, &mut out, &mut inc, source, a.initial(), EPS)?;
    for f in a.finals() {
        add(&mut arena, &mut out, &mut inc, f, sink, EPS)?;
    }

    let mut alive: BTreeSet<usize> = (0..n).collect();
    while !alive.is_empty() {
        budget.poll()?;
        let k = *alive
            .iter()
            .min_by_key(|&&q| {
                let i = inc[q].iter().filter(|&&p| p != q).count();
                let o = out[q].keys().filter(|&&t| t != q).count();
                (i * o, q)
            })
            .expect("non-empty");
        alive.remove(&k);
        let loop_star = match out[k].get(&k) {
            Some(&l) => arena.star(l)?,
            None => EPS,
        };
        let preds: Vec<usize> = inc[k].iter().copied().filter(|&p| p != k).collect();
        let succs: Vec<(usize, NodeId)> = out[k]
            .iter()
            .filter(|(&t, _)| t != k)
            .map(|(&t, &l)| (t, l))
            .collect();
        for &p in &preds {
            let into = out[p].remove(&k).expect("edge recorded");
            let head = arena.concat(into, loop_star)?;
            for &(q, from) in &succs {
                let label = arena.concat(head, from)?;
                add(&mut arena, &mut out, &mut inc, p, q, label)?;
            }
        }
        for &(q, _) in &succs {
            inc[q].remove(&k);
        }
        out[k].clear();
        inc[k].clear();
    }
    let root = out[source].get(&sink).copied().unwrap_or(EMPTY);
    Ok(Eliminated {
        arena,
        root,
        alphabet: a.alphabet().clone(),
    })
}
