use super::gens::{Alphabet, Gen, PresKind};
use super::relations::defining_relations;
use super::solve::{check_complete, solve_rules, Row, Rules, SolveError};
use super::word::Word;
use crate::scalars::Scalar;
use rustc_hash::{FxHashMap, FxHasher};
use std::cell::Cell;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// Default per-call reduction budget.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

const SHARDS: usize = 64;
const MAX_DEPTH: u32 = 4096;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NfError {
    #[error("normal form budget of {0} reductions exceeded")]
    Budget(u64),
    #[error("rewriting did not terminate (depth limit)")]
    Depth,
    #[error("no rewrite rule for {0} {1}")]
    MissingRule(String, String),
    #[error("elements belong to different presentations")]
    Mismatch,
}

type Terms = Vec<(Word, Scalar)>;
type Memo = Mutex<FxHashMap<(Word, u8), Arc<Terms>>>;

thread_local! {
    static STEPS: Cell<u64> = const { Cell::new(0) };
    static BUDGET: Cell<u64> = const { Cell::new(DEFAULT_BUDGET) };
    static NESTING: Cell<u32> = const { Cell::new(0) };
}

/// Sets the reduction budget for calls made on this thread.
pub fn set_budget(b: u64) {
    BUDGET.with(|c| c.set(b));
}

static NEXT_ID: AtomicUsize = AtomicUsize::new(1);

/// A finitely presented quadratic algebra with a PBW basis of ordered words.
pub struct Presentation {
    pub alpha: Alphabet,
    id: usize,
    rules: Vec<Option<Arc<Terms>>>,
    rule_map: Rules,
    relations: Vec<Row>,
    memo: Vec<Memo>,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Presentation({} N={})", self.alpha.kind.name(), self.alpha.n)
    }
}

impl Presentation {
    /// Builds a presentation from its defining relations.
    pub fn build(kind: PresKind, n: usize) -> Result<Presentation, SolveError> {
        let alpha = Alphabet::new(kind, n);
        let rels = defining_relations(&alpha);
        Presentation::from_relations(alpha, rels)
    }

    pub fn from_relations(alpha: Alphabet, relations: Vec<Row>) -> Result<Presentation, SolveError> {
        let (rule_map, residual) = solve_rules(&alpha, &relations);
        check_complete(&alpha, &rule_map, &residual)?;
        Ok(Presentation::from_rules(alpha, rule_map, relations))
    }

    pub fn from_rules(alpha: Alphabet, rule_map: Rules, relations: Vec<Row>) -> Presentation {
        let ng = alpha.len();
        let mut rules = vec![None; ng * ng];
        for ((a, b), rhs) in &rule_map {
            rules[*a as usize * ng + *b as usize] = Some(Arc::new(rhs.clone()));
        }
        Presentation {
            alpha,
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            rules,
            rule_map,
            relations,
            memo: (0..SHARDS).map(|_| Mutex::new(FxHashMap::default())).collect(),
        }
    }

    /// A copy with the coefficient of one term of one rule multiplied by `q`.
    pub fn perturbed(&self, pair: (u8, u8)) -> Presentation {
        let mut rm = self.rule_map.clone();
        if let Some(rhs) = rm.get_mut(&pair) {
            if let Some(t) = rhs.first_mut() {
                t.1 = t.1.mul(&Scalar::q());
            }
        }
        Presentation::from_rules(self.alpha.clone(), rm, self.relations.clone())
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn kind(&self) -> PresKind {
        self.alpha.kind
    }

    pub fn n(&self) -> usize {
        self.alpha.n
    }

    pub fn gens(&self) -> &[Gen] {
        &self.alpha.gens
    }

    pub fn rules(&self) -> &Rules {
        &self.rule_map
    }

    pub fn relation_rows(&self) -> &[Row] {
        &self.relations
    }

    pub fn gen_name(&self, g: u8) -> String {
        self.alpha.gens[g as usize].to_string()
    }

    fn shard(&self, key: &(Word, u8)) -> &Memo {
        let mut h = FxHasher::default();
        key.hash(&mut h);
        &self.memo[(h.finish() as usize) % SHARDS]
    }

    fn tick(&self) -> Result<(), NfError> {
        STEPS.with(|s| {
            let v = s.get() + 1;
            s.set(v);
            let b = BUDGET.with(|b| b.get());
            if v > b {
                Err(NfError::Budget(b))
            } else {
                Ok(())
            }
        })
    }

    /// Normal form of `u g` for a normal word `u`.
    fn insert(&self, u: &Word, g: u8, depth: u32) -> Result<Arc<Terms>, NfError> {
        if u.is_empty() || self.alpha.basis_pair(u[u.len() - 1], g) {
            return Ok(Arc::new(vec![(u.pushed(g), Scalar::one())]));
        }
        let key = (u.clone(), g);
        if let Some(v) = self.shard(&key).lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        if depth > MAX_DEPTH {
            return Err(NfError::Depth);
        }
        self.tick()?;
        let a = u[u.len() - 1];
        let ng = self.alpha.len();
        let rule = self.rules[a as usize * ng + g as usize]
            .clone()
            .ok_or_else(|| NfError::MissingRule(self.gen_name(a), self.gen_name(g)))?;
        let prefix = u.prefix();
        let mut acc: FxHashMap<Word, Scalar> = FxHashMap::default();
        for (rw, c) in rule.iter() {
            let part = self.append(vec![(prefix.clone(), c.clone())], rw, depth + 1)?;
            merge(&mut acc, part);
        }
        let mut out: Terms = acc.into_iter().collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        let out = Arc::new(out);
        self.shard(&key).lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of `sum c_k w_k * letters` for normal words `w_k`.
    fn append(&self, start: Terms, letters: &[u8], depth: u32) -> Result<Terms, NfError> {
        let mut cur = start;
        for &g in letters {
            let mut acc: FxHashMap<Word, Scalar> = FxHashMap::default();
            for (w, c) in cur {
                let r = self.insert(&w, g, depth)?;
                for (w2, c2) in r.iter() {
                    let v = if c2.is_one() { c.clone() } else { c.mul(c2) };
                    add_into(&mut acc, w2, v);
                }
            }
            cur = acc.into_iter().collect();
        }
        Ok(cur)
    }

    /// Runs `f` as one top-level reduction: the step counter resets unless nested.
    pub(crate) fn budgeted<T>(f: impl FnOnce() -> Result<T, NfError>) -> Result<T, NfError> {
        let outer = NESTING.with(|n| {
            let v = n.get();
            n.set(v + 1);
            v == 0
        });
        if outer {
            STEPS.with(|s| s.set(0));
        }
        let r = f();
        NESTING.with(|n| n.set(n.get() - 1));
        r
    }

    /// Normal form of `prefix * word` where `prefix` is normal.
    pub(crate) fn reduce_product(&self, prefix: &Word, c: &Scalar, word: &[u8]) -> Result<Terms, NfError> {
        self.append(vec![(prefix.clone(), c.clone())], word, 0)
    }

    pub fn is_normal_word(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.alpha.basis_pair(p[0], p[1]))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.iter().map(|m| m.lock().unwrap().len()).sum()
    }
}

fn add_into(acc: &mut FxHashMap<Word, Scalar>, w: &Word, v: Scalar) {
    match acc.get_mut(w) {
        Some(e) => {
            *e = e.add(&v);
            if e.is_zero() {
                acc.remove(w);
            }
        }
        None => {
            if !v.is_zero() {
                acc.insert(w.clone(), v);
            }
        }
    }
}

fn merge(acc: &mut FxHashMap<Word, Scalar>, part: Terms) {
    for (w, c) in part {
        add_into(acc, &w, c);
    }
}

static CACHE: OnceLock<Mutex<HashMap<(PresKind, usize), Arc<Presentation>>>> = OnceLock::new();

/// Shared presentation of the given kind and size.
///
/// Panics if the built-in relation table fails to determine a complete rule set.
pub fn presentation(kind: PresKind, n: usize) -> Arc<Presentation> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&(kind, n)) {
        return p.clone();
    }
    let p = Arc::new(
        Presentation::build(kind, n).unwrap_or_else(|e| panic!("{} N={}: {:?}", kind.name(), n, e)),
    );
    cache.lock().unwrap().entry((kind, n)).or_insert(p).clone()
}
