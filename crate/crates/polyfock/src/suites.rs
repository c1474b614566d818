//! The suites behind `polyfock verify`. Each returns a report whose entries
//! are `{"relation", "instance", "pass", "witness"}` objects, in a fixed
//! order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use serde_json::{json, Map, Value};

use polyfock_core::blocks::{block_decomposition, verify_klesh_equivalence};
use polyfock_core::crystal::{Crystal, SignatureOrder};
use polyfock_core::exactla::{ExactField, PrimeField, Rationals};
use polyfock_core::fock::{apply_e, apply_f, commutator_defect, FockVector};
use polyfock_core::functorlab::{casimir_difference_sides, hecke_relations, spectrum_check};
use polyfock_core::partitions::{addable_boxes, partitions_of, partitions_up_to};
use polyfock_core::weights::{pair_coroot, wt, CartanMatrix};
use polyfock_core::{Error, Modulus, Partition, Residue, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub relation: String,
    pub instance: Value,
    pub pass: bool,
    pub witness: Option<Value>,
    /// Further keys merged into the JSON object.
    pub extra: Map<String, Value>,
}

impl Entry {
    fn new(relation: impl Into<String>, instance: Value, witness: Option<Value>) -> Self {
        Entry { relation: relation.into(), instance, pass: witness.is_none(), witness, extra: Map::new() }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = self.extra.clone();
        obj.insert("relation".into(), Value::String(self.relation.clone()));
        obj.insert("instance".into(), self.instance.clone());
        obj.insert("pass".into(), Value::Bool(self.pass));
        obj.insert("witness".into(), self.witness.clone().unwrap_or(Value::Null));
        Value::Object(obj)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub entries: Vec<Entry>,
    /// False when outcomes are only reported, as for characteristic 2 runs.
    pub asserted: bool,
}

impl Report {
    fn asserted(entries: Vec<Entry>) -> Self {
        Report { entries, asserted: true }
    }

    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(Entry::to_json).collect())
    }

    /// One line per entry: status, relation, instance and any witness.
    pub fn to_table(&self) -> String {
        let width = self.entries.iter().map(|e| e.relation.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let status = if e.pass { "pass" } else { "FAIL" };
            let pad = width - e.relation.chars().count();
            out.push_str(&format!("{}  {}{}  {}", status, e.relation, " ".repeat(pad), e.instance));
            if let Some(w) = &e.witness {
                out.push_str(&format!("  witness={}", w));
            }
            out.push('\n');
        }
        out
    }

    pub fn exit_code(&self) -> u8 {
        if !self.asserted || self.pass() {
            0
        } else {
            1
        }
    }
}

macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            ExactField::Rationals => {
                let $f = &Rationals;
                $body
            }
            ExactField::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

/// `items.iter().map(f)` spread over a worker pool; results keep input order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(items.len()).max(1);
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = items.iter().map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        if k >= items.len() {
                            return done;
                        }
                        done.push((k, f(&items[k])));
                    }
                })
            })
            .collect();
        for h in handles {
            match h.join() {
                Ok(done) => done.into_iter().for_each(|(k, r)| slots[k] = Some(r)),
                Err(panic) => std::panic::resume_unwind(panic),
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every index is claimed once")).collect()
}

/// First item for which `fails` returns a description.
fn first_failure<T>(items: impl IntoIterator<Item = T>, fails: impl FnMut(T) -> Option<String>) -> Option<Value> {
    items.into_iter().find_map(fails).map(Value::String)
}

fn basis(p: Modulus, lambda: &Partition) -> FockVector {
    FockVector::basis(p, lambda.clone())
}

fn ad_power(
    x: Residue,
    y: Residue,
    k: usize,
    v: &FockVector,
    op: fn(Residue, &FockVector) -> FockVector,
) -> FockVector {
    if k == 0 {
        return op(y, v);
    }
    let xy = op(x, &ad_power(x, y, k - 1, v, op));
    let yx = ad_power(x, y, k - 1, &op(x, v), op);
    xy.sub(&yx)
}

/// Chevalley relations, Serre relations, nilpotency and weight shifts on
/// every `s_λ` with `|λ| ≤ max_size` (Serre up to size 10).
pub fn commutators(moduli: &[Modulus], max_size: usize) -> Report {
    let mut entries = Vec::new();
    for &p in moduli {
        let instance = json!({ "p": p.get(), "max_size": max_size });
        let all = partitions_up_to(max_size);
        let pairs = || {
            all.iter().flat_map(move |l| {
                let rs = p.residues_up_to(l.size());
                rs.iter()
                    .flat_map(|&i| rs.iter().map(move |&j| (i, j)))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .map(move |ij| (l, ij))
            })
        };
        let singles = || all.iter().flat_map(move |l| p.residues_up_to(l.size()).into_iter().map(move |i| (l, i)));

        entries.push(Entry::new(
            "[e_i, f_j] = delta_ij h_i",
            instance.clone(),
            first_failure(pairs(), |(l, (i, j))| {
                (!commutator_defect(i, j, &basis(p, l)).is_zero()).then(|| format!("lambda={} i={} j={}", l, i, j))
            }),
        ));

        let cartan = CartanMatrix::new(p);
        let serre_max = max_size.min(10);
        entries.push(Entry::new(
            "ad(e_i)^(1-a_ij) e_j = 0 and ad(f_i)^(1-a_ij) f_j = 0",
            json!({ "p": p.get(), "max_size": serre_max }),
            first_failure(pairs().filter(|(l, (i, j))| l.size() <= serre_max && i != j), |(l, (i, j))| {
                let k = (1 - cartan.entry(i, j)) as usize;
                let v = basis(p, l);
                let ok = ad_power(i, j, k, &v, apply_e).is_zero() && ad_power(i, j, k, &v, apply_f).is_zero();
                (!ok).then(|| format!("lambda={} i={} j={}", l, i, j))
            }),
        ));

        entries.push(Entry::new(
            "e_i^(|lambda|+1) s_lambda = 0 and f_i^(k+1) s_lambda = 0",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let mut e = basis(p, l);
                for _ in 0..=l.size() {
                    e = apply_e(i, &e);
                }
                let mut f = basis(p, l);
                for _ in 0..=addable_boxes(l, p, Some(i)).len() {
                    f = apply_f(i, &f);
                }
                (!(e.is_zero() && f.is_zero())).then(|| format!("lambda={} i={}", l, i))
            }),
        ));

        entries.push(Entry::new(
            "e_i and f_i shift weights by +alpha_i and -alpha_i",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let w = wt(l, p);
                let v = basis(p, l);
                let up = apply_e(i, &v).support().all(|m| wt(m, p) == w.plus_root(i));
                let down = apply_f(i, &v).support().all(|m| wt(m, p) == w.minus_root(i));
                (!(up && down)).then(|| format!("lambda={} i={}", l, i))
            }),
        ));

        let empty = Partition::empty();
        entries.push(Entry::new(
            "e_i s_empty = 0",
            json!({ "p": p.get() }),
            first_failure(p.residues_up_to(0), |i| {
                (!apply_e(i, &basis(p, &empty)).is_zero()).then(|| format!("i={}", i))
            }),
        ));
    }
    Report::asserted(entries)
}

fn field_instance(field: ExactField) -> Value {
    Value::String(field.name())
}

fn check_char2(field: ExactField, allow_char2: bool) -> Result<bool> {
    match (field.characteristic() == 2, allow_char2) {
        (true, false) => Err(Error::CharacteristicTwo),
        (true, true) => Ok(false),
        _ => Ok(true),
    }
}

/// `C_{V⊕k} − C_V` against its expansion through `X_V`, on `(V ⊕ k)^{⊗d}`.
pub fn casimir(field: ExactField, grid: &[(usize, usize)], allow_char2: bool) -> Result<Report> {
    let asserted = check_char2(field, allow_char2)?;
    let results = par_map(grid, |&(n, d)| -> Result<_> {
        Ok(with_field!(field, f => {
            let (lhs, rhs) = casimir_difference_sides(f, n, d)?;
            lhs.first_difference(&rhs)
        }))
    });
    let mut entries = Vec::new();
    for (&(n, d), witness) in grid.iter().zip(results) {
        let witness = witness?;
        entries.push(Entry::new(
            "C_(V+k) - C_V = 2 X_V + sum_i x_ii - n x_(n+1)(n+1) + x_(n+1)(n+1)^2 + 2n",
            json!({ "n": n, "d": d, "field": field_instance(field) }),
            witness.map(Value::from),
        ));
    }
    Ok(Report { entries, asserted })
}

/// Degenerate affine Hecke relations on the `(1, ..., 1)`-weight space.
pub fn hecke(field: ExactField, grid: &[(usize, usize, usize)], allow_char2: bool) -> Result<Report> {
    let asserted = check_char2(field, allow_char2)?;
    let results =
        par_map(grid, |&(n, m, d)| -> Result<_> { Ok(with_field!(field, f => hecke_relations(f, n, m, d)?)) });
    let mut entries = Vec::new();
    for (&(n, m, d), checks) in grid.iter().zip(results) {
        let checks = checks?;
        let instance = json!({ "n": n, "m": m, "d": d, "field": field_instance(field) });
        for c in checks {
            entries.push(Entry::new(c.relation, instance.clone(), c.witness.map(Value::from)));
        }
    }
    Ok(Report { entries, asserted })
}

/// Generalized eigenspaces of `X` on `E(S_λ)(V)` for every `λ ⊢ d`.
pub fn spectrum(field: ExactField, ns: &[usize], ds: &[usize]) -> Result<Report> {
    let instances: Vec<(usize, Partition)> = ns
        .iter()
        .flat_map(|&n| ds.iter().flat_map(move |&d| partitions_of(d).into_iter().map(move |l| (n, l))))
        .collect();
    let results =
        par_map(&instances, |(n, lambda)| -> Result<_> { Ok(with_field!(field, f => spectrum_check(f, lambda, *n)?)) });
    let mut entries = Vec::new();
    for ((n, lambda), report) in instances.iter().zip(results) {
        let report = report?;
        let witness = report.failures.first().cloned().map(Value::String);
        let mut entry = Entry::new(
            "X acts on E(S_lambda)(V) with eigenvalues the removable contents",
            json!({ "lambda": lambda.to_string(), "n": n, "field": field_instance(field) }),
            witness,
        );
        let eigen: Vec<Value> = report
            .entries
            .iter()
            .map(|e| json!({ "value": e.eigenvalue, "expected": e.expected, "observed": e.observed }))
            .collect();
        entry.extra.insert("dim".into(), Value::from(report.dim));
        entry.extra.insert("eigenvalues".into(), Value::Array(eigen));
        entries.push(entry);
    }
    Ok(Report::asserted(entries))
}

/// Same `p`-core if and only if same weight, and `p·w + |core| = d`, for
/// every degree up to `max_d`.
pub fn klesh(moduli: &[Modulus], max_d: usize) -> Result<Report> {
    let mut entries = Vec::new();
    for &p in moduli {
        for d in 0..=max_d {
            let instance = json!({ "p": p.get(), "d": d });
            let ok = verify_klesh_equivalence(d, p)?;
            entries.push(Entry::new(
                "same p-core <=> same weight",
                instance.clone(),
                (!ok).then(|| Value::String(format!("d={}", d))),
            ));
            let witness = match block_decomposition(d, p) {
                Err(e) => Some(Value::String(e.to_string())),
                Ok(blocks) => blocks
                    .iter()
                    .find(|b| p.get() as usize * b.id.p_weight() + b.id.core().size() != d)
                    .map(|b| Value::String(b.id.core().to_string())),
            };
            entries.push(Entry::new("p * p_weight + |core| = d", instance, witness));
        }
    }
    Ok(Report::asserted(entries))
}

fn distinct_part_counts(max: usize) -> Vec<usize> {
    (0..=max).map(|k| partitions_of(k).iter().filter(|l| l.parts().windows(2).all(|w| w[0] > w[1])).count()).collect()
}

/// Crystal axioms on all `|λ| ≤ max_size`; at `p = 2` also the size
/// profile of the component of `∅`.
pub fn crystal(moduli: &[Modulus], max_size: usize, order: SignatureOrder) -> Report {
    let mut entries = Vec::new();
    for &p in moduli {
        let c = Crystal::with_order(p, order);
        let instance = json!({ "p": p.get(), "max_size": max_size, "signature_order": order.name() });
        let all = partitions_up_to(max_size);
        let singles = || all.iter().flat_map(move |l| p.residues_up_to(l.size()).into_iter().map(move |i| (l, i)));

        entries.push(Entry::new(
            "ftilde_i(lambda) = mu <=> etilde_i(mu) = lambda",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let forward = c.ftilde(i, l).is_none_or(|m| c.etilde(i, &m).as_ref() == Some(l));
                let backward = c.etilde(i, l).is_none_or(|m| c.ftilde(i, &m).as_ref() == Some(l));
                (!(forward && backward)).then(|| format!("lambda={} i={}", l, i))
            }),
        ));
        entries.push(Entry::new(
            "wt(ftilde_i lambda) = wt(lambda) - alpha_i",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                c.ftilde(i, l).filter(|m| wt(m, p) != wt(l, p).minus_root(i)).map(|_| format!("lambda={} i={}", l, i))
            }),
        ));
        entries.push(Entry::new(
            "phi_i and eps_i are the string lengths",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let phi = std::iter::successors(Some(l.clone()), |m| c.ftilde(i, m)).count() - 1;
                let eps = std::iter::successors(Some(l.clone()), |m| c.etilde(i, m)).count() - 1;
                (phi != c.phi(i, l) || eps != c.eps(i, l)).then(|| format!("lambda={} i={}", l, i))
            }),
        ));
        entries.push(Entry::new(
            "phi_i - eps_i = <h_i, wt(lambda)>",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let diff = c.phi(i, l) as i64 - c.eps(i, l) as i64;
                (diff != pair_coroot(i, &wt(l, p))).then(|| format!("lambda={} i={}", l, i))
            }),
        ));
        entries.push(Entry::new(
            "ftilde_i(lambda) lies in the support of f_i s_lambda",
            instance.clone(),
            first_failure(singles(), |(l, i)| {
                let target = c.ftilde(i, l)?;
                let v = apply_f(i, &basis(p, l));
                let hit = v.support().any(|m| *m == target);
                (!hit).then(|| format!("lambda={} i={}", l, i))
            }),
        ));
        if p.get() == 2 {
            let counts = c.graph(max_size, &Partition::empty()).counts_by_size(max_size);
            let expected = distinct_part_counts(max_size);
            let mut entry = Entry::new(
                "component of the empty partition has the distinct-part counts",
                instance.clone(),
                (counts != expected).then(|| json!(counts)),
            );
            entry.extra.insert("counts".into(), json!(counts));
            entries.push(entry);
        }
    }
    Report::asserted(entries)
}
