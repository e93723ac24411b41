//! Enumeration, seeded sampling, reflection checks and the registry of property suites.
//!
//! Every suite evaluates independent cases, each with its own seeded stream,
//! and merges the outcomes by case index. Parallel and sequential runs therefore
//! render the same report.

pub mod gen;
mod suites;

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embed::{EmbedFn, Value};
use crate::error::{Error, Result};
use crate::gap_seq::GapSeq;
use crate::gap_tree::UnitTree;
use crate::ord::OrdTerm;
use crate::reify::BadSeq;

pub use gen::{enum_phi2_terms, enum_trees, enum_words, phi_size, sample_below};
pub use suites::{default_spec, run_suite, suite_names};

/// Which carrier a [`DomainSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarrierKind {
    Ordinals,
    GapSeqs,
    Trees,
    BulletSeqs,
    ReifyTerms,
}

/// Size caps and seed of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainSpec {
    pub carrier: CarrierKind,
    pub alphabet: u32,
    pub max_len: usize,
    pub max_nodes: usize,
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
    pub parallel: bool,
}

impl DomainSpec {
    pub fn new(carrier: CarrierKind) -> Self {
        DomainSpec {
            carrier,
            alphabet: 3,
            max_len: 4,
            max_nodes: 7,
            max_size: 8,
            samples: 1000,
            seed: 0,
            parallel: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let caps = [
            self.alphabet as usize,
            self.max_len,
            self.max_nodes,
            self.max_size,
            self.samples,
        ];
        if caps.contains(&0) {
            return Err(Error::PreconditionViolated("domain caps must be positive".into()));
        }
        Ok(())
    }

    /// The seeded stream of case `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// Outcome of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<String>,
    pub wall: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One `FAIL` line per failure followed by a summary; wall time is omitted.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            out.push_str(&format!("FAIL {} {}\n", self.suite, f));
        }
        let verdict = if self.passed() { "ok" } else { "failed" };
        out.push_str(&format!(
            "{verdict} {} cases={} failures={}\n",
            self.suite,
            self.cases,
            self.failures.len()
        ));
        out
    }

    pub(crate) fn merge(suite: &str, parts: Vec<CheckReport>, wall: Duration) -> CheckReport {
        CheckReport {
            suite: suite.to_string(),
            cases: parts.iter().map(|p| p.cases).sum(),
            failures: parts.into_iter().flat_map(|p| p.failures).collect(),
            wall,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Evaluates cases `0..n` and returns every failure in case order.
pub fn run_cases<F>(n: usize, parallel: bool, case: F) -> Vec<String>
where
    F: Fn(usize) -> Vec<String> + Sync + Send,
{
    map_cases(n, parallel, case).into_iter().flatten().collect()
}

/// Maps `case` over `0..n`, keeping the results in index order.
pub fn map_cases<T, F>(n: usize, parallel: bool, case: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if parallel {
        par_cases(n, &case)
    } else {
        (0..n).map(&case).collect()
    }
}

#[cfg(feature = "parallel")]
fn par_cases<T, F>(n: usize, case: &F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(case).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_cases<T, F>(n: usize, case: &F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(case).collect()
}

/// Builds a report from a case count and a failing-case producer, timing the run.
pub fn report<F>(suite: &str, n: usize, parallel: bool, case: F) -> CheckReport
where
    F: Fn(usize) -> Vec<String> + Sync + Send,
{
    let start = Instant::now();
    let failures = run_cases(n, parallel, case);
    CheckReport {
        suite: suite.to_string(),
        cases: n as u64,
        failures,
        wall: start.elapsed(),
    }
}

/// All sequences over `0..alphabet` of length at most `max_len`, length-lexicographic.
pub fn enum_seqs(alphabet: u32, max_len: usize) -> impl Iterator<Item = GapSeq> {
    enum_words(alphabet, max_len).into_iter().map(move |w| {
        let members: Vec<u64> = w.iter().map(|&a| a as u64).collect();
        GapSeq::from_nats(&members, alphabet as u64).expect("letters are below the alphabet")
    })
}

/// Grows a bad sequence by rejection sampling, stopping at `max_len` or after
/// `stall` consecutive rejections.
pub fn grow_bad_sequence<T>(
    rng: &mut ChaCha8Rng,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> T,
    leq: impl Fn(&T, &T) -> bool,
    max_len: usize,
    stall: usize,
) -> BadSeq<T> {
    let mut elements: Vec<T> = Vec::new();
    let mut misses = 0;
    while elements.len() < max_len.max(1) && (misses < stall || elements.is_empty()) {
        let x = sample(rng);
        if elements.iter().all(|p| !leq(p, &x)) {
            elements.push(x);
            misses = 0;
        } else {
            misses += 1;
        }
    }
    BadSeq::new(elements, leq).expect("grown sequences are bad by construction")
}

/// Stall budget for [`grow_bad_sequence`].
pub const STALL_BUDGET: usize = 200;

/// Grows a bad sequence of unit-leaf trees from `spec`.
pub fn grow_bad_trees(spec: &DomainSpec, index: u64, max_len: usize) -> BadSeq<UnitTree> {
    let mut rng = spec.rng(index);
    let (alphabet, nodes) = (spec.alphabet, spec.max_nodes);
    grow_bad_sequence(
        &mut rng,
        |r| gen::random_unit_tree(r, alphabet, nodes, false),
        crate::gap_tree::leq_tree,
        max_len,
        STALL_BUDGET,
    )
}

fn violates(f: &EmbedFn, x: &Value, y: &Value) -> bool {
    f.domain.contains(x) && f.domain.contains(y) && matches!(f.reflects(x, y), Ok(false))
}

/// Values obtained from `v` by deleting one member, summand or subtree.
pub fn shrink_candidates(v: &Value) -> Vec<Value> {
    match v {
        Value::Seq(o, s) => (0..s.len())
            .map(|i| {
                let mut t = s.clone();
                t.remove(i);
                Value::Seq(*o, t)
            })
            .collect(),
        Value::List(s) => (0..s.len())
            .map(|i| {
                let mut t = s.clone();
                t.remove(i);
                Value::List(t)
            })
            .collect(),
        Value::Ord(a) => (0..a.summands().len())
            .map(|i| {
                let mut xs = a.summands().to_vec();
                xs.remove(i);
                Value::Ord(OrdTerm::from_summands_unchecked(xs))
            })
            .filter(|c| matches!(c, Value::Ord(t) if t.validate().is_ok()))
            .collect(),
        Value::Tree(t) => t
            .subtrees()
            .into_iter()
            .skip(1)
            .map(|s| Value::tree(s.clone()))
            .collect(),
        _ => Vec::new(),
    }
}

/// Greedily shrinks a violating pair while it stays in the domain and keeps violating.
pub fn minimize_pair(f: &EmbedFn, x: &Value, y: &Value) -> (Value, Value) {
    let (mut x, mut y) = (x.clone(), y.clone());
    loop {
        let next_x = shrink_candidates(&x).into_iter().find(|c| violates(f, c, &y));
        if let Some(c) = next_x {
            x = c;
            continue;
        }
        let next_y = shrink_candidates(&y).into_iter().find(|c| violates(f, &x, c));
        match next_y {
            Some(c) => y = c,
            None => return (x, y),
        }
    }
}

/// Checks `target_leq(f(x), f(y)) ⇒ source_leq(x, y)` on every pair, minimizing violations.
pub fn check_reflection(f: &EmbedFn, pairs: &[(Value, Value)], parallel: bool) -> CheckReport {
    let start = Instant::now();
    let failures = run_cases(pairs.len(), parallel, |i| {
        let (x, y) = &pairs[i];
        match f.reflects(x, y) {
            Ok(true) => Vec::new(),
            Ok(false) => {
                let (mx, my) = minimize_pair(f, x, y);
                vec![format!("{}: {} vs {}", f.name, mx, my)]
            }
            Err(e) => vec![format!("{}: {} vs {}: {}", f.name, x, y, e)],
        }
    });
    CheckReport {
        suite: format!("reflect-{}", f.name),
        cases: pairs.len() as u64,
        failures,
        wall: start.elapsed(),
    }
}

/// Every ordered pair drawn from `xs`.
pub fn all_pairs(xs: &[Value]) -> Vec<(Value, Value)> {
    xs.iter()
        .flat_map(|x| xs.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{seq_to_tree_fn, Domain, SeqOrder};

    #[test]
    fn seq_enumeration() {
        assert_eq!(enum_seqs(3, 4).count(), 121);
        assert_eq!(enum_seqs(2, 0).collect::<Vec<_>>().len(), 1);
    }

    #[test]
    fn bad_growth() {
        let spec = DomainSpec {
            alphabet: 3,
            max_nodes: 12,
            ..DomainSpec::new(CarrierKind::Trees)
        };
        let s = grow_bad_trees(&spec, 5, 50);
        let t = grow_bad_trees(&spec, 5, 50);
        assert_eq!(s, t);
        assert_eq!(grow_bad_trees(&spec, 1, 1).elements().len(), 1);
    }

    #[test]
    fn reflection_controls() {
        let words: Vec<Value> = enum_words(3, 3)
            .into_iter()
            .map(|w| Value::weak(w.iter().map(|&a| OrdTerm::nat(a as u64)).collect()))
            .collect();
        let f = seq_to_tree_fn(&OrdTerm::nat(3));
        assert!(check_reflection(&f, &all_pairs(&words), true).passed());

        let id = EmbedFn::new(
            "identity",
            vec![],
            Domain::seqs(SeqOrder::Weak, OrdTerm::nat(3)),
            Domain::seqs(SeqOrder::Weak, OrdTerm::nat(3)),
            |x| Ok(x.clone()),
        );
        assert!(check_reflection(&id, &all_pairs(&words), false).passed());

        let constant = EmbedFn::new(
            "constant",
            vec![],
            Domain::seqs(SeqOrder::Weak, OrdTerm::nat(3)),
            Domain::ordinals(OrdTerm::one()),
            |_| Ok(Value::Ord(OrdTerm::zero())),
        );
        let pair = vec![(Value::weak(vec![OrdTerm::one()]), Value::weak(vec![OrdTerm::zero()]))];
        let r = check_reflection(&constant, &pair, false);
        assert_eq!(r.failures.len(), 1);
    }
}
