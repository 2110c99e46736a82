//! The verdict pipeline.
//!
//! Rules run cheapest first: identity, proper powers, the exponent-gcd test,
//! the explicit pattern families, Whitehead search, the rank-2 test-word
//! deduction, and finally a finite-group sweep. Every achiral verdict carries
//! at least one verified [`InversionCertificate`]; every chiral verdict carries
//! either a finite witness or a test-word deduction whose premises can be
//! re-checked independently.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{self, catalog_list, FiniteGroup, Witness, DEFAULT_EVAL_CAP};
use crate::morphism::{
    named_family, Automorphism, Endomorphism, Family, InversionCertificate, MorphismError,
};
use crate::numeric::bezout;
use crate::whitehead::{self, SearchStats, WhiteheadError, DEFAULT_BUDGET};
use crate::word::{enumerate_reduced, Word};

/// Longest word length [`census`] accepts by default.
pub const DEFAULT_CENSUS_MAX: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("inconsistent evidence for {word}: verified certificate and chiral evidence")]
    Inconsistent { word: String },
    #[error("certificate for {word} failed verification: {reason}")]
    BadCertificate { word: String, reason: String },
    #[error("census length {length} exceeds the cap {cap}")]
    LengthCap { length: usize, cap: usize },
    #[error("census length must be positive")]
    ZeroLength,
    #[error(transparent)]
    Whitehead(#[from] WhiteheadError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Achiral,
    Chiral,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    GcdSurjective,
    Palindrome,
    TwoBlock,
    FourBlock,
    PowerReduce,
    AutOrbit,
    TestWord,
    TestWordChiral,
    FiniteWitness,
    RankEmbed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    Achiral,
    Chiral,
    /// The rule ran to completion without deciding.
    Inconclusive,
    /// The rule ran out of budget.
    Indeterminate,
    /// A structural fact used by later rules.
    Observation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RuleParams {
    Exponents {
        exponents: Vec<i64>,
        gcd: u64,
    },
    Pattern {
        family: Family,
        params: Vec<i64>,
        /// `x_i` is relabelled to `x_{relabel[i-1]}` before the family applies.
        relabel: Vec<usize>,
    },
    Power {
        root: Word,
        k: i64,
    },
    Orbit {
        found: Option<bool>,
        budget: usize,
        stats: SearchStats,
    },
    Witness(Witness),
    Embed {
        from_rank: usize,
        to_rank: usize,
        generators: Vec<usize>,
    },
    None {},
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFiring {
    pub rule: Rule,
    pub outcome: Outcome,
    pub params: RuleParams,
}

/// Classification of a word, with evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub word: Word,
    pub status: Status,
    pub reasons: Vec<RuleFiring>,
    pub certificates: Vec<InversionCertificate>,
    pub witness: Option<Witness>,
    /// Result of the Whitehead query: `None` when it ran out of budget.
    pub aut_invertible: Option<bool>,
    /// Membership in `D_n`; only asserted for test words.
    pub in_d: Option<bool>,
}

impl Verdict {
    fn new(word: Word) -> Self {
        Verdict {
            word,
            status: Status::Undecided,
            reasons: Vec::new(),
            certificates: Vec::new(),
            witness: None,
            aut_invertible: None,
            in_d: None,
        }
    }

    pub fn fired(&self, rule: Rule) -> bool {
        self.reasons.iter().any(|r| r.rule == rule)
    }

    pub fn firing(&self, rule: Rule) -> Option<&RuleFiring> {
        self.reasons.iter().find(|r| r.rule == rule)
    }
}

/// Budgets and the group catalog for [`classify`].
#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub budget: usize,
    pub eval_cap: u64,
    pub catalog: Vec<FiniteGroup>,
    /// Sweep the catalog even when achirality is already certified.
    pub always_sweep: bool,
    pub census_max_length: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: DEFAULT_BUDGET,
            eval_cap: DEFAULT_EVAL_CAP,
            catalog: catalog_list(group::DEFAULT_SWEEP).expect("default catalog builds"),
            always_sweep: false,
            census_max_length: DEFAULT_CENSUS_MAX,
        }
    }
}

/// Fires when the exponent sums have gcd 1, so `w` is surjective on every
/// group. The certificate sends `x_i -> w^(-c_i)` for Bezout coefficients
/// `c_i`; all images commute, so `w` maps to `w^-(Σ c_i e_i) = w^-1`.
pub fn rule_gcd(w: &Word) -> Option<(RuleFiring, InversionCertificate)> {
    let ev = w.exponent_vector();
    let gcd = ev.gcd();
    if gcd != 1 {
        return None;
    }
    let (_, coeffs) = bezout(ev.sums());
    let endo = Endomorphism::new(coeffs.iter().map(|&c| w.pow(-c)).collect()).expect("rank >= 1");
    let firing = RuleFiring {
        rule: Rule::GcdSurjective,
        outcome: Outcome::Achiral,
        params: RuleParams::Exponents {
            exponents: ev.0,
            gcd,
        },
    };
    Some((firing, InversionCertificate::endomorphism(w.clone(), endo)))
}

/// Permutation automorphism sending `x_a -> x1`, `x_b -> x2`, others after.
fn relabel_to_front(front: &[usize], rank: usize) -> (Automorphism, Vec<usize>) {
    let mut perm = vec![usize::MAX; rank];
    for (j, &g) in front.iter().enumerate() {
        perm[g - 1] = j;
    }
    let free = perm.iter_mut().filter(|p| **p == usize::MAX);
    for (next, p) in (front.len()..).zip(free) {
        *p = next;
    }
    let aut = Automorphism::signed_permutation(&perm, &vec![false; rank]);
    (aut, perm.iter().map(|p| p + 1).collect())
}

/// Palindromes, `a^m1 b^m2` and `a^m b^e1 a^n b^e2` with `e1 = ±e2`, for any
/// two distinct generators `a`, `b`.
pub fn rule_patterns(w: &Word) -> Option<(RuleFiring, InversionCertificate)> {
    if w.is_identity() {
        return None;
    }
    let rank = w.rank();
    if w.is_palindrome() {
        let aut = named_family(Family::InvertAll, &[], rank).ok()?;
        let cert = InversionCertificate::automorphism(w.clone(), &aut);
        let firing = RuleFiring {
            rule: Rule::Palindrome,
            outcome: Outcome::Achiral,
            params: RuleParams::Pattern {
                family: Family::InvertAll,
                params: vec![],
                relabel: (1..=rank).collect(),
            },
        };
        return Some((firing, cert));
    }
    let syl = w.syllables();
    let (rule, family, params) = match syl.as_slice() {
        [s1, s2] if s1.generator != s2.generator => (
            Rule::TwoBlock,
            Family::TwoBlock,
            vec![s1.exponent, s2.exponent],
        ),
        [s1, s2, s3, s4]
            if s1.generator == s3.generator
                && s2.generator == s4.generator
                && s2.exponent.abs() == s4.exponent.abs() =>
        {
            let family = if s2.exponent == s4.exponent {
                Family::FourBlockSame
            } else {
                Family::FourBlockOpposite
            };
            (Rule::FourBlock, family, vec![s1.exponent])
        }
        _ => return None,
    };
    let (tau, relabel) = relabel_to_front(&[syl[0].generator, syl[1].generator], rank);
    let base_word = tau.apply(w).ok()?;
    let aut = named_family(family, &params, rank).ok()?;
    let cert = InversionCertificate::automorphism(base_word, &aut)
        .conjugate(&tau.inverse())
        .ok()?;
    let firing = RuleFiring {
        rule,
        outcome: Outcome::Achiral,
        params: RuleParams::Pattern {
            family,
            params,
            relabel,
        },
    };
    Some((firing, cert))
}

/// If `w = u^k` with `k >= 2` maximal, returns `(u, k)`.
pub fn rule_power(w: &Word) -> Option<(Word, i64)> {
    let (core, conj) = w.cyclic_reduce();
    let n = core.len();
    let letters = core.letters();
    let period = (1..n)
        .filter(|p| n % p == 0)
        .find(|&p| (p..n).all(|i| letters[i] == letters[i - p]))?;
    let root_core = Word::from_letters(letters[..period].iter().copied(), w.rank()).ok()?;
    let root = root_core.conjugate_by(&conj).ok()?;
    Some((root, (n / period) as i64))
}

/// Test-word observation in rank 2: `w != e` with zero exponent sums, i.e. a
/// nontrivial element of the commutator subgroup.
pub fn rule_testword_f2(w: &Word) -> Option<RuleFiring> {
    if w.rank() != 2 || w.is_identity() {
        return None;
    }
    let ev = w.exponent_vector();
    if !ev.is_zero() {
        return None;
    }
    Some(RuleFiring {
        rule: Rule::TestWord,
        outcome: Outcome::Observation,
        params: RuleParams::Exponents {
            exponents: ev.0,
            gcd: 0,
        },
    })
}

fn push_certificate(v: &mut Verdict, cert: InversionCertificate) -> Result<(), ClassifyError> {
    cert.verify().map_err(|e| ClassifyError::BadCertificate {
        word: cert.word.to_string(),
        reason: e.to_string(),
    })?;
    if !v.certificates.contains(&cert) {
        v.certificates.push(cert);
    }
    Ok(())
}

fn finish(mut v: Verdict) -> Result<Verdict, ClassifyError> {
    let chiral_evidence = v.witness.is_some() || v.fired(Rule::TestWordChiral);
    if !v.certificates.is_empty() && chiral_evidence {
        return Err(ClassifyError::Inconsistent {
            word: v.word.to_string(),
        });
    }
    v.status = if !v.certificates.is_empty() {
        Status::Achiral
    } else if chiral_evidence {
        Status::Chiral
    } else {
        Status::Undecided
    };
    Ok(v)
}

/// Runs the full pipeline on `w`.
pub fn classify(w: &Word, opts: &ClassifyOptions) -> Result<Verdict, ClassifyError> {
    let rank = w.rank();
    if w.is_identity() {
        let mut v = Verdict::new(w.clone());
        push_certificate(
            &mut v,
            InversionCertificate::automorphism(w.clone(), &Automorphism::identity(rank)),
        )?;
        v.aut_invertible = Some(true);
        return finish(v);
    }

    let support = w.support();
    if support.len() < rank {
        return classify_embedded(w, &support, opts);
    }

    let mut v = Verdict::new(w.clone());

    if let Some((root, k)) = rule_power(w) {
        let inner = classify(&root, opts)?;
        let outcome = match inner.status {
            Status::Achiral => Outcome::Achiral,
            _ => Outcome::Inconclusive,
        };
        v.reasons.push(RuleFiring {
            rule: Rule::PowerReduce,
            outcome,
            params: RuleParams::Power {
                root: root.clone(),
                k,
            },
        });
        if inner.status == Status::Achiral {
            for c in &inner.certificates {
                push_certificate(&mut v, c.power(k)?)?;
            }
            v.reasons.extend(inner.reasons);
            // roots are unique, so σ(u^k) = u^-k iff σ(u) = u^-1
            v.aut_invertible = inner.aut_invertible;
            v.in_d = inner.in_d;
            return finish(v);
        }
    }

    if let Some((firing, cert)) = rule_gcd(w) {
        v.reasons.push(firing);
        push_certificate(&mut v, cert)?;
    }

    if let Some((firing, cert)) = rule_patterns(w) {
        v.reasons.push(firing);
        push_certificate(&mut v, cert)?;
    }

    let orbit = whitehead::aut_inverts(w, opts.budget);
    match orbit {
        Ok(res) => {
            v.aut_invertible = Some(res.found);
            v.reasons.push(RuleFiring {
                rule: Rule::AutOrbit,
                outcome: if res.found {
                    Outcome::Achiral
                } else {
                    Outcome::Inconclusive
                },
                params: RuleParams::Orbit {
                    found: Some(res.found),
                    budget: opts.budget,
                    stats: res.stats,
                },
            });
            if let Some(aut) = &res.automorphism {
                push_certificate(&mut v, InversionCertificate::automorphism(w.clone(), aut))?;
            }
        }
        Err(WhiteheadError::Indeterminate { nodes_explored, .. }) => {
            v.reasons.push(RuleFiring {
                rule: Rule::AutOrbit,
                outcome: Outcome::Indeterminate,
                params: RuleParams::Orbit {
                    found: None,
                    budget: opts.budget,
                    stats: SearchStats {
                        nodes_explored,
                        ..SearchStats::default()
                    },
                },
            });
        }
        // Ranks above the move-enumeration limit: the rule abstains.
        Err(WhiteheadError::RankTooLarge(_)) => {}
        Err(e) => return Err(e.into()),
    }

    if let Some(firing) = rule_testword_f2(w) {
        v.reasons.push(firing);
        match v.aut_invertible {
            Some(true) => v.in_d = Some(true),
            Some(false) => {
                // a test word inverted by an endomorphism is inverted by an
                // automorphism; none exists, so no endomorphism inverts w
                v.in_d = Some(false);
                v.reasons.push(RuleFiring {
                    rule: Rule::TestWordChiral,
                    outcome: Outcome::Chiral,
                    params: RuleParams::None {},
                });
            }
            None => {}
        }
    }

    let decided = !v.certificates.is_empty() || v.fired(Rule::TestWordChiral);
    if !decided || opts.always_sweep {
        let sweep = group::chirality_witness(w, &opts.catalog, opts.eval_cap);
        if let Some(wit) = sweep.witness {
            v.reasons.push(RuleFiring {
                rule: Rule::FiniteWitness,
                outcome: Outcome::Chiral,
                params: RuleParams::Witness(wit.clone()),
            });
            v.witness = Some(wit);
        }
    }

    finish(v)
}

/// Classifies `w` in the free group on its own generators and lifts the
/// result back to the ambient rank.
fn classify_embedded(
    w: &Word,
    support: &[usize],
    opts: &ClassifyOptions,
) -> Result<Verdict, ClassifyError> {
    let rank = w.rank();
    let m = support.len();
    let (tau, _) = relabel_to_front(support, rank);
    let small = tau
        .apply(w)?
        .with_rank(m)
        .expect("support relabelled to the front");
    let inner = classify(&small, opts)?;

    let mut v = Verdict::new(w.clone());
    v.reasons.push(RuleFiring {
        rule: Rule::RankEmbed,
        outcome: Outcome::Observation,
        params: RuleParams::Embed {
            from_rank: m,
            to_rank: rank,
            generators: support.to_vec(),
        },
    });
    let back = tau.inverse();
    for c in &inner.certificates {
        push_certificate(&mut v, c.extend(rank)?.conjugate(&back)?)?;
    }
    v.reasons.extend(inner.reasons);
    v.witness = inner.witness;
    v.aut_invertible = inner.aut_invertible;
    v.in_d = inner.in_d;
    finish(v)
}

/// Classifies many words in parallel; output order follows input order.
pub fn classify_batch(
    words: &[Word],
    opts: &ClassifyOptions,
) -> Vec<Result<Verdict, ClassifyError>> {
    words.par_iter().map(|w| classify(w, opts)).collect()
}

/// Summary of all reduced rank-2 words of one length.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub length: usize,
    pub total: usize,
    pub expected_total: usize,
    pub aut_invertible: usize,
    pub not_aut_invertible: Vec<Word>,
    pub indeterminate: Vec<Word>,
    pub histogram: BTreeMap<Status, usize>,
    pub verdicts: Vec<Verdict>,
}

/// Enumerates and classifies every reduced word of `F_2` of the given length.
pub fn census(length: usize, opts: &ClassifyOptions) -> Result<CensusReport, ClassifyError> {
    if length == 0 {
        return Err(ClassifyError::ZeroLength);
    }
    if length > opts.census_max_length {
        return Err(ClassifyError::LengthCap {
            length,
            cap: opts.census_max_length,
        });
    }
    let words = enumerate_reduced(2, length);
    let verdicts = classify_batch(&words, opts)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut histogram = BTreeMap::new();
    let mut not_aut = Vec::new();
    let mut indeterminate = Vec::new();
    let mut aut = 0;
    for v in &verdicts {
        *histogram.entry(v.status).or_insert(0) += 1;
        match v.aut_invertible {
            Some(true) => aut += 1,
            Some(false) => not_aut.push(v.word.clone()),
            None => indeterminate.push(v.word.clone()),
        }
    }
    Ok(CensusReport {
        length,
        total: words.len(),
        expected_total: 4 * 3usize.pow(length as u32 - 1),
        aut_invertible: aut,
        not_aut_invertible: not_aut,
        indeterminate,
        histogram,
        verdicts,
    })
}

/// The words among `words` that `aut` sends to their inverse.
pub fn inverted_by(words: &[Word], aut: &Automorphism) -> Vec<Word> {
    words
        .iter()
        .filter(|w| aut.apply(w).map(|img| img == w.invert()).unwrap_or(false))
        .cloned()
        .collect()
}

/// Commutator convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bracket {
    /// `[a, b] = a b a^-1 b^-1`
    #[default]
    Standard,
    /// `[a, b] = a^-1 b^-1 a b`
    Inverse,
}

impl Bracket {
    pub fn apply(self, a: &Word, b: &Word) -> Word {
        match self {
            Bracket::Standard => Word::commutator(a, b),
            Bracket::Inverse => Word::commutator(&a.invert(), &b.invert()),
        }
        .expect("equal ranks")
    }
}

/// Conjugation convention for `g^h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Conjugation {
    /// `g^h = h^-1 g h`
    #[default]
    Left,
    /// `g^h = h g h^-1`
    Right,
}

impl Conjugation {
    pub fn apply(self, g: &Word, h: &Word) -> Word {
        match self {
            Conjugation::Left => g.conjugate_by(&h.invert()),
            Conjugation::Right => g.conjugate_by(h),
        }
        .expect("equal ranks")
    }
}

/// Engel word `e_n` in `F_2`: `e_1 = [x1, x2]`, `e_{k+1} = [e_k, x2]`.
pub fn engel(n: usize, bracket: Bracket) -> Word {
    assert!(n >= 1, "Engel words start at n = 1");
    let x = Word::generator(1, 2).expect("rank 2");
    let y = Word::generator(2, 2).expect("rank 2");
    (1..n).fold(bracket.apply(&x, &y), |e, _| bracket.apply(&e, &y))
}

/// The word `[x^k (x^k)^(y^k) x^k, (y^k)^(x^k y^k) y^k]` in `F_2`; with
/// `k = 440` this is a known chiral test word.
pub fn cocke_ho_word(k: i64, conj: Conjugation) -> Word {
    let xk = Word::from_syllables([(1, k)], 2).expect("rank 2");
    let yk = Word::from_syllables([(2, k)], 2).expect("rank 2");
    let cat = |a: &Word, b: &Word| a.concat(b).expect("rank 2");
    let left = cat(&cat(&xk, &conj.apply(&xk, &yk)), &xk);
    let right = cat(&conj.apply(&yk, &cat(&xk, &yk)), &yk);
    Bracket::Standard.apply(&left, &right)
}
