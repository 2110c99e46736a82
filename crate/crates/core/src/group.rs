//! Finite groups as Cayley tables, and images of word maps on them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::Word;

/// Largest order the catalog will build.
pub const MAX_CATALOG_ORDER: usize = 120;
/// Default cap on the number of tuples evaluated by [`image`].
pub const DEFAULT_EVAL_CAP: u64 = 10_000_000;
/// Groups up to this order get a full associativity check.
const FULL_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_CHECKS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("group order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("evaluating {tuples} tuples exceeds cap {cap}; raise the cap or use a smaller group")]
    EvalCap { tuples: u128, cap: u64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A validated finite group on elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a multiplication table (`rows[g][h] = g·h`).
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        let bad = |m: String| GroupError::InvalidTable(m);
        if order == 0 {
            return Err(bad("empty table".into()));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(bad(format!("{} labels for order {order}", l.len())));
            }
        }
        let mut table = Vec::with_capacity(order * order);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(bad(format!("row {g} has {} entries", row.len())));
            }
            let mut seen = vec![false; order];
            for &p in row {
                if p >= order || std::mem::replace(&mut seen[p], true) {
                    return Err(bad(format!("row {g} is not a permutation of 0..{order}")));
                }
                table.push(p as u32);
            }
        }
        for h in 0..order {
            let mut seen = vec![false; order];
            for g in 0..order {
                let p = table[g * order + h] as usize;
                if std::mem::replace(&mut seen[p], true) {
                    return Err(bad(format!("column {h} repeats element {p}")));
                }
            }
        }
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|g| {
                    table[e * order + g] as usize == g && table[g * order + e] as usize == g
                })
            })
            .ok_or_else(|| bad("no two-sided identity".into()))?;
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| table[g * order + h] as usize == identity)
                .expect("Latin square row contains identity");
            if table[inv * order + g] as usize != identity {
                return Err(bad(format!("element {g} has no two-sided inverse")));
            }
            inverses[g] = inv;
        }
        let group = FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
            labels,
        };
        group.check_associative()?;
        Ok(group)
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let fails = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
        };
        let witness = if n <= FULL_ASSOC_LIMIT {
            (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .find(|&(a, b, c)| fails(a, b, c))
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            (0..SAMPLED_ASSOC_CHECKS)
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
                .find(|&(a, b, c)| fails(a, b, c))
        };
        match witness {
            Some((a, b, c)) => Err(GroupError::InvalidTable(format!(
                "not associative at ({a}, {b}, {c})"
            ))),
            None => Ok(()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `g`, or its index when the group has no labels.
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// `g^k` by square-and-multiply, with `k` reduced modulo the order of `g`.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let ord = self.element_order(g) as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = g;
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Direct product `self × other`, element `(a, b)` at `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let rows = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        FiniteGroup::from_table(format!("{}x{}", self.name, other.name), rows, Some(labels))
            .expect("direct product of groups is a group")
    }

    /// Serializes to the Cayley table text format.
    pub fn to_table_text(&self) -> String {
        let mut s = format!("order {}\nidentity {}\n", self.order, self.identity);
        for g in 0..self.order {
            let row = (0..self.order)
                .map(|h| self.mul(g, h).to_string())
                .join(" ");
            s.push_str(&row);
            s.push('\n');
        }
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                s.push_str(&format!("label {i} {l}\n"));
            }
        }
        s
    }

    /// Parses the Cayley table text format: `order n`, `identity i`, `n` rows
    /// of `n` indices, then optional `label i name` lines.
    pub fn parse_table_text(name: &str, text: &str) -> Result<FiniteGroup, GroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, msg: &str| GroupError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut header = |key: &str| -> Result<usize, GroupError> {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| perr(0, &format!("missing `{key}` line")))?;
            l.strip_prefix(key)
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| perr(ln, &format!("expected `{key} <n>`")))
        };
        let order = header("order")?;
        let identity = header("identity")?;
        if order > MAX_CATALOG_ORDER * 100 {
            return Err(GroupError::OrderCap {
                order,
                cap: MAX_CATALOG_ORDER * 100,
            });
        }
        let mut rows = Vec::with_capacity(order);
        let mut labels: Vec<Option<String>> = vec![None; order];
        let mut any_label = false;
        for (ln, l) in lines {
            if let Some(rest) = l.strip_prefix("label") {
                let mut parts = rest.trim().splitn(2, char::is_whitespace);
                let idx: usize = parts
                    .next()
                    .and_then(|v| v.parse().ok())
                    .filter(|&i| i < order)
                    .ok_or_else(|| perr(ln, "bad label index"))?;
                let name = parts.next().map(str::trim).unwrap_or("");
                if name.is_empty() {
                    return Err(perr(ln, "empty label"));
                }
                labels[idx] = Some(name.to_string());
                any_label = true;
                continue;
            }
            if rows.len() == order {
                return Err(perr(ln, "more rows than the order"));
            }
            let row = l
                .split_whitespace()
                .map(|v| v.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| perr(ln, "expected element indices"))?;
            rows.push(row);
        }
        if rows.len() != order {
            return Err(perr(
                0,
                &format!("expected {order} rows, found {}", rows.len()),
            ));
        }
        let labels = if any_label {
            Some(
                labels
                    .into_iter()
                    .enumerate()
                    .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
                    .collect(),
            )
        } else {
            None
        };
        let g = FiniteGroup::from_table(name, rows, labels)?;
        if g.identity != identity {
            return Err(perr(
                2,
                &format!(
                    "declared identity {identity} but table identity is {}",
                    g.identity
                ),
            ));
        }
        Ok(g)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

pub fn cyclic(k: usize) -> FiniteGroup {
    let rows = (0..k)
        .map(|a| (0..k).map(|b| (a + b) % k).collect())
        .collect();
    let labels = (0..k).map(|a| a.to_string()).collect();
    FiniteGroup::from_table(format!("C{k}"), rows, Some(labels)).expect("cyclic group")
}

/// Dihedral group of order `2k`; element `s^f r^i` at index `f*k + i`.
pub fn dihedral(k: usize) -> FiniteGroup {
    let n = 2 * k;
    // r^i s = s r^-i
    let mul = |x: usize, y: usize| {
        let (f1, i1) = (x / k, x % k);
        let (f2, i2) = (y / k, y % k);
        let i = if f2 == 1 {
            (k - i1 + i2) % k
        } else {
            (i1 + i2) % k
        };
        ((f1 + f2) % 2) * k + i
    };
    let rows = (0..n)
        .map(|x| (0..n).map(|y| mul(x, y)).collect())
        .collect();
    let labels = (0..n)
        .map(|x| {
            let (f, i) = (x / k, x % k);
            match (f, i) {
                (0, 0) => "1".to_string(),
                (0, i) => format!("r^{i}"),
                (_, 0) => "s".to_string(),
                (_, i) => format!("s r^{i}"),
            }
        })
        .collect();
    FiniteGroup::from_table(format!("D{k}"), rows, Some(labels)).expect("dihedral group")
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Group of permutations of `0..degree`, product `(p·q)(x) = p(q(x))`.
fn permutation_group(name: String, elements: Vec<Vec<usize>>) -> FiniteGroup {
    let index: HashMap<Vec<usize>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let rows = elements
        .iter()
        .map(|p| {
            elements
                .iter()
                .map(|q| {
                    let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                    index[&pq]
                })
                .collect()
        })
        .collect();
    let labels = elements.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_table(name, rows, Some(labels)).expect("permutation group")
}

pub fn symmetric(k: usize) -> FiniteGroup {
    let elements = (0..k).permutations(k).collect();
    permutation_group(format!("S{k}"), elements)
}

pub fn alternating(k: usize) -> FiniteGroup {
    let elements = (0..k).permutations(k).filter(|p| is_even(p)).collect();
    permutation_group(format!("A{k}"), elements)
}

/// Quaternion group; index `2u + s` is `(-1)^s · unit[u]` with units `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    // unit products: (u, v) -> (sign flip, unit)
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = PROD[x / 2][y / 2];
                    2 * u + ((x % 2) + (y % 2) + s) % 2
                })
                .collect()
        })
        .collect();
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    FiniteGroup::from_table("Q8", rows, Some(labels)).expect("quaternion group")
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn build_factor(desc: &str) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownFamily(desc.to_string());
    if desc == "Q8" {
        return Ok(quaternion());
    }
    let (family, k) = desc.split_at(1);
    let k: usize = k.parse().map_err(|_| unknown())?;
    if k == 0 {
        return Err(unknown());
    }
    let order = match family {
        "C" => k,
        "D" if k >= 2 => 2 * k,
        "S" | "A" if k <= 5 => factorial(k) / if family == "A" && k >= 2 { 2 } else { 1 },
        "S" | "A" => {
            return Err(GroupError::OrderCap {
                order: factorial(k),
                cap: MAX_CATALOG_ORDER,
            })
        }
        _ => return Err(unknown()),
    };
    if order > MAX_CATALOG_ORDER {
        return Err(GroupError::OrderCap {
            order,
            cap: MAX_CATALOG_ORDER,
        });
    }
    Ok(match family {
        "C" => cyclic(k),
        "D" => dihedral(k),
        "S" => symmetric(k),
        _ => alternating(k),
    })
}

/// Builds a group from a descriptor such as `C3`, `D4`, `S3`, `A4`, `Q8` or a
/// direct product `C2xS3`.
pub fn catalog(desc: &str) -> Result<FiniteGroup, GroupError> {
    let desc = desc.trim();
    let parts: Vec<&str> = desc.split('x').collect();
    let mut order = 1usize;
    let mut acc: Option<FiniteGroup> = None;
    for p in parts {
        let g = build_factor(p.trim())?;
        order = order.saturating_mul(g.order());
        if order > MAX_CATALOG_ORDER {
            return Err(GroupError::OrderCap {
                order,
                cap: MAX_CATALOG_ORDER,
            });
        }
        acc = Some(match acc {
            None => g,
            Some(a) => a.product(&g),
        });
    }
    acc.map(|g| g.with_name(desc))
        .ok_or_else(|| GroupError::UnknownFamily(desc.into()))
}

/// Nonabelian groups used by default for chirality witness sweeps.
pub const DEFAULT_SWEEP: &str = "S3,D4,Q8,D5,A4,D6,S4,A5";
/// The groups used for desk-scale surjectivity checks.
pub const SURJECTIVITY_SET: &str = "C2,C3,C4,C5,C6,S3,D4,Q8,A4";

/// Parses a comma separated list of descriptors. `default`, `abelian` and
/// `surjectivity` expand to preset lists.
pub fn catalog_list(spec: &str) -> Result<Vec<FiniteGroup>, GroupError> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "default" => out.extend(catalog_list(DEFAULT_SWEEP)?),
            "abelian" => out.extend(catalog_list("C2,C3,C4,C5,C6,C2xC2,C2xC4")?),
            "surjectivity" => out.extend(catalog_list(SURJECTIVITY_SET)?),
            d => out.push(catalog(d)?),
        }
    }
    Ok(out)
}

/// The image `G_w` of a word map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageSet {
    pub group_name: String,
    #[serde(serialize_with = "ser_word")]
    pub word: Word,
    pub members: BTreeSet<usize>,
}

fn ser_word<S: serde::Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// Number of tuples [`image`] will evaluate: `|G|^(number of generators in w)`.
pub fn tuple_count(g: &FiniteGroup, w: &Word) -> u128 {
    (g.order() as u128).pow(w.support().len() as u32)
}

/// Computes `G_w` by enumerating all tuples for the generators that occur in
/// `w`. Fails if that exceeds `eval_cap` tuples.
pub fn image(g: &FiniteGroup, w: &Word, eval_cap: u64) -> Result<ImageSet, GroupError> {
    let support = w.support();
    let tuples = tuple_count(g, w);
    if tuples > eval_cap as u128 {
        return Err(GroupError::EvalCap {
            tuples,
            cap: eval_cap,
        });
    }
    let mut slot_of = vec![usize::MAX; w.rank() + 1];
    for (i, &gen) in support.iter().enumerate() {
        slot_of[gen] = i;
    }
    let syllables: Vec<(usize, i64)> = w
        .syllables()
        .iter()
        .map(|s| (slot_of[s.generator], s.exponent))
        .collect();
    // pow_tables[s][x] = x^(exponent of syllable s)
    let pow_tables: Vec<Vec<usize>> = syllables
        .iter()
        .map(|&(_, e)| (0..g.order()).map(|x| g.pow(x, e)).collect())
        .collect();
    let n = g.order();
    let r = support.len();

    let members: BTreeSet<usize> = if r == 0 {
        BTreeSet::from([g.identity()])
    } else {
        let found = (0..n)
            .into_par_iter()
            .map(|first| {
                let mut hit = vec![false; n];
                let mut tuple = vec![0usize; r];
                tuple[0] = first;
                loop {
                    let value = syllables
                        .iter()
                        .zip(&pow_tables)
                        .fold(g.identity(), |acc, (&(slot, _), table)| {
                            g.mul(acc, table[tuple[slot]])
                        });
                    hit[value] = true;
                    // odometer over slots 1..r
                    let mut i = 1;
                    while i < r {
                        tuple[i] += 1;
                        if tuple[i] < n {
                            break;
                        }
                        tuple[i] = 0;
                        i += 1;
                    }
                    if i == r {
                        break;
                    }
                }
                hit
            })
            .reduce(
                || vec![false; n],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                    a
                },
            );
        found
            .into_iter()
            .enumerate()
            .filter_map(|(i, h)| h.then_some(i))
            .collect()
    };
    Ok(ImageSet {
        group_name: g.name().to_string(),
        word: w.clone(),
        members,
    })
}

pub fn is_inverse_closed(s: &ImageSet, g: &FiniteGroup) -> bool {
    s.members.iter().all(|&m| s.members.contains(&g.inverse(m)))
}

/// An element of `G_w` whose inverse is not in `G_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub group: String,
    pub element: usize,
    pub label: String,
}

/// Outcome of a catalog sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessSweep {
    pub witness: Option<Witness>,
    pub checked: Vec<String>,
    pub skipped: Vec<(String, GroupError)>,
}

/// Looks for a group in `groups` on which `G_w` is not inverse closed. A
/// `None` witness says nothing about achirality.
pub fn chirality_witness(w: &Word, groups: &[FiniteGroup], eval_cap: u64) -> WitnessSweep {
    let mut sweep = WitnessSweep::default();
    for g in groups {
        match image(g, w, eval_cap) {
            Ok(img) => {
                sweep.checked.push(g.name().to_string());
                if let Some(&m) = img
                    .members
                    .iter()
                    .find(|&&m| !img.members.contains(&g.inverse(m)))
                {
                    sweep.witness = Some(Witness {
                        group: g.name().to_string(),
                        element: m,
                        label: g.label(m),
                    });
                    return sweep;
                }
            }
            Err(e) => sweep.skipped.push((g.name().to_string(), e)),
        }
    }
    sweep
}

/// True iff the word map is onto `G`.
pub fn surjectivity_check(w: &Word, g: &FiniteGroup, eval_cap: u64) -> Result<bool, GroupError> {
    Ok(image(g, w, eval_cap)?.members.len() == g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse;

    fn w(s: &str) -> Word {
        parse(s, 2).unwrap()
    }

    #[test]
    fn catalog_examples() {
        let c2 = catalog("C2").unwrap();
        assert_eq!(c2.order(), 2);
        let s3 = catalog("S3").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(catalog("D4").unwrap().order(), 8);
        assert_eq!(catalog("A4").unwrap().order(), 12);
        assert_eq!(catalog("A5").unwrap().order(), 60);
        assert_eq!(catalog("S5").unwrap().order(), 120);
        let p = catalog("C2xS3").unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.name(), "C2xS3");
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(catalog("Z5"), Err(GroupError::UnknownFamily(_))));
        assert!(matches!(catalog("S6"), Err(GroupError::OrderCap { .. })));
        assert!(matches!(catalog("S5xC2"), Err(GroupError::OrderCap { .. })));
        assert!(matches!(catalog("C0"), Err(GroupError::UnknownFamily(_))));
    }

    #[test]
    fn invalid_tables_rejected() {
        let not_latin = vec![vec![0, 1], vec![0, 1]];
        assert!(FiniteGroup::from_table("bad", not_latin, None).is_err());
        // Latin square with identity but not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", loop5, None).unwrap_err();
        assert!(matches!(err, GroupError::InvalidTable(_)));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        for desc in ["S4", "Q8", "D5", "C6"] {
            let g = catalog(desc).unwrap();
            for x in 0..g.order() {
                for k in -7i64..=7 {
                    let base = if k < 0 { g.inverse(x) } else { x };
                    let naive = (0..k.unsigned_abs()).fold(g.identity(), |a, _| g.mul(a, base));
                    assert_eq!(g.pow(x, k), naive, "{desc} {x}^{k}");
                }
            }
        }
    }

    #[test]
    fn image_examples() {
        let comm = w("x1 x2 x1^-1 x2^-1");
        for desc in ["C4", "C2xC3", "C5"] {
            let g = catalog(desc).unwrap();
            let img = image(&g, &comm, DEFAULT_EVAL_CAP).unwrap();
            assert_eq!(img.members, BTreeSet::from([g.identity()]));
        }
        // squares in S3: identity and the two 3-cycles
        let s3 = catalog("S3").unwrap();
        let img = image(&s3, &parse("x1^2", 1).unwrap(), DEFAULT_EVAL_CAP).unwrap();
        let brute: BTreeSet<usize> = (0..6).map(|x| s3.mul(x, x)).collect();
        assert_eq!(img.members, brute);
        assert_eq!(img.members.len(), 3);

        let x1 = parse("x1", 3).unwrap();
        assert_eq!(image(&s3, &x1, DEFAULT_EVAL_CAP).unwrap().members.len(), 6);
    }

    #[test]
    fn image_cap() {
        let s4 = catalog("S4").unwrap();
        let word = parse("x1 x2 x3 x4 x5", 5).unwrap();
        assert!(matches!(
            image(&s4, &word, 1000),
            Err(GroupError::EvalCap { .. })
        ));
        // identity word needs no tuples
        let e = Word::identity(3);
        assert_eq!(image(&s4, &e, 1).unwrap().members.len(), 1);
    }

    #[test]
    fn inverse_closed_examples() {
        let s4 = catalog("S4").unwrap();
        let cubes = image(&s4, &parse("x1^3", 1).unwrap(), DEFAULT_EVAL_CAP).unwrap();
        assert!(is_inverse_closed(&cubes, &s4));
        let e = image(&s4, &Word::identity(1), DEFAULT_EVAL_CAP).unwrap();
        assert!(is_inverse_closed(&e, &s4));
        let comm = image(&s4, &w("x1 x2 x1^-1 x2^-1"), DEFAULT_EVAL_CAP).unwrap();
        assert!(is_inverse_closed(&comm, &s4));
    }

    #[test]
    fn witness_examples() {
        let groups = catalog_list("default").unwrap();
        for s in ["x1^2 x2^3", "x1 x2 x1"] {
            let sweep = chirality_witness(&w(s), &groups, DEFAULT_EVAL_CAP);
            assert!(sweep.witness.is_none(), "{s}");
            assert!(sweep.skipped.is_empty());
        }
        let e2 = w("x1 x2 x1^-1 x2 x1 x2^-1 x1^-1 x2^-1");
        let abelian = catalog_list("abelian").unwrap();
        assert!(chirality_witness(&e2, &abelian, DEFAULT_EVAL_CAP)
            .witness
            .is_none());
    }

    #[test]
    fn surjectivity_examples() {
        let s3 = catalog("S3").unwrap();
        assert!(surjectivity_check(&w("x1^2 x2^3"), &s3, DEFAULT_EVAL_CAP).unwrap());
        assert!(!surjectivity_check(&w("x1 x2 x1^-1 x2^-1"), &s3, DEFAULT_EVAL_CAP).unwrap());
        let comm = image(&s3, &w("x1 x2 x1^-1 x2^-1"), DEFAULT_EVAL_CAP).unwrap();
        assert_eq!(comm.members.len(), 3);
        assert!(surjectivity_check(&w("x1"), &catalog("A5").unwrap(), DEFAULT_EVAL_CAP).unwrap());
    }

    #[test]
    fn table_text_round_trip() {
        let q = quaternion();
        let text = q.to_table_text();
        let back = FiniteGroup::parse_table_text("Q8", &text).unwrap();
        assert_eq!(back, q);
        assert!(matches!(
            FiniteGroup::parse_table_text("x", "order 2\nidentity 0\n0 1\n"),
            Err(GroupError::Parse { .. })
        ));
        assert!(matches!(
            FiniteGroup::parse_table_text("x", "order 2\nidentity 1\n0 1\n1 0\n"),
            Err(GroupError::Parse { line: 2, .. })
        ));
    }
}
