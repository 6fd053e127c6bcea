//! Corpus construction and verification suites.
//!
//! Each suite walks the corpus, decides the hypothesis of one statement for
//! every group by exact comparison, and checks the conclusion where the
//! hypothesis holds.  Groups are processed in parallel; reports keep corpus
//! order.

mod corpus;
mod report;
mod suites;
mod sweeps;

pub use corpus::{corpus_specs, Corpus, CorpusEntry, CorpusParams, Families};
pub use report::{
    Anomaly, Check, GroupRecord, Status, Summary, VerificationReport, Witness, REPORT_HEADER,
};
pub use sweeps::{
    cyclic_few_divisors, dihedral_above_inverse_p, dihedral_decreasing, multiplicative_pairs,
    semidirect_sandwich, SweepOutcome,
};

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::is_prime;

/// The verification suites, named by what they test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `f(G) > f(T)` for `T` in `C2xC2, Q8, S3, A4, A5` forces cyclic,
    /// abelian, nilpotent, supersoluble, soluble respectively.
    Cascade,
    /// `l(G) > l(A4)` forces a normal 2-complement.
    TwoNilpotent,
    /// `l(G) >= l(D_2p)` forces `G ≅ D_2p` or `G = O_p x O_p'` with `O_p` cyclic.
    Dihedral,
    /// `f(G) > f(D_2p)` for `p <= 13` forces cyclic, nilpotent or supersoluble.
    SmallPrimes,
    /// Orders with two primes, and odd orders.
    Corollaries,
    /// Bounds, quotient and subgroup inequalities, multiplicativity, Sylow
    /// criteria and closed-form sweeps.
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Cascade,
        Suite::TwoNilpotent,
        Suite::Dihedral,
        Suite::SmallPrimes,
        Suite::Corollaries,
        Suite::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cascade => "cascade",
            Suite::TwoNilpotent => "two-nilpotent",
            Suite::Dihedral => "dihedral",
            Suite::SmallPrimes => "small-primes",
            Suite::Corollaries => "corollaries",
            Suite::Lemmas => "lemmas",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Cascade => {
                "f(G) > f(C2xC2) => cyclic; f(G) > f(Q8) => abelian; f(G) > f(S3) => nilpotent; \
                 f(G) > f(A4) => supersoluble; f(G) > f(A5) => soluble; for f in {psi'', l}"
            }
            Suite::TwoNilpotent => "l(G) > l(A4) => G is 2-nilpotent",
            Suite::Dihedral => {
                "p odd prime dividing |G| and l(G) >= l(D_2p) => G = D_2p, or l(G) > l(D_2p) and \
                 G = O_p(G) x O_p'(G) with O_p(G) cyclic"
            }
            Suite::SmallPrimes => {
                "p dividing |G| and f(G) > f(D_2p): p = 3 => cyclic, p <= 5 => nilpotent, \
                 p <= 13 => supersoluble; for f in {psi'', l}"
            }
            Suite::Corollaries => {
                "|G| = p^a q^b with p odd and l(G) > l(D_2p) => nilpotent; |G| odd with smallest \
                 prime p: l(G) > l(D_2p) => cyclic, with the converse when at most (p+1)/2 primes divide |G|"
            }
            Suite::Lemmas => {
                "0 < l <= psi'' < 1; AM >= GM; f(G) < f(G/N); f(C_n) < f(K) for K < C_n; \
                 multiplicativity on coprime orders; index bound; cyclic normal Sylow when f > 1/p; \
                 p-nilpotency lifts from G/O_p'; closed-form sweeps and families"
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown suite `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Knobs shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Odd primes for the dihedral-threshold statements.
    pub primes: Vec<u64>,
    /// Normal subgroups are enumerated completely up to this order.
    pub lattice_cap: usize,
    /// Largest `|G| |H|` in the coprime-pair multiplicativity sweep.
    pub pair_product_limit: u64,
    /// Largest odd `n` in the cyclic sweep.
    pub cyclic_sweep_limit: u64,
    /// Largest odd prime in the `l(D_2p) > 1/p` sweep.
    pub prime_sweep_limit: u64,
    /// Largest `pq` in the `C_p ⋊ C_q` sandwich sweep.
    pub semidirect_limit: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            primes: vec![3, 5, 7, 11, 13],
            lattice_cap: crate::structure::NORMAL_LATTICE_CAP,
            pair_product_limit: 2000,
            cyclic_sweep_limit: 100_000,
            prime_sweep_limit: 10_000,
            semidirect_limit: 2000,
        }
    }
}

impl SuiteParams {
    fn validate(&self) -> Result<()> {
        if let Some(&p) = self.primes.iter().find(|&&p| p == 2 || !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
        }
        Ok(())
    }

    fn to_json(&self, corpus: &Corpus) -> Value {
        json!({
            "max_order": corpus.params.max_order,
            "corpus_size": corpus.len(),
            "primes": self.primes,
            "lattice_cap": self.lattice_cap,
            "pair_product_limit": self.pair_product_limit,
            "cyclic_sweep_limit": self.cyclic_sweep_limit,
            "prime_sweep_limit": self.prime_sweep_limit,
            "semidirect_limit": self.semidirect_limit,
        })
    }
}

pub fn run_suite(
    suite: Suite,
    corpus: &Corpus,
    params: &SuiteParams,
) -> Result<VerificationReport> {
    params.validate()?;
    let (records, witnesses, anomalies) = match suite {
        Suite::Cascade => suites::cascade(corpus)?,
        Suite::TwoNilpotent => suites::two_nilpotent(corpus)?,
        Suite::Dihedral => suites::dihedral(corpus, params)?,
        Suite::SmallPrimes => suites::small_primes(corpus, params)?,
        Suite::Corollaries => suites::corollaries(corpus, params)?,
        Suite::Lemmas => suites::lemmas(corpus, params)?,
    };
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        description: suite.description().to_string(),
        params: params.to_json(corpus),
        records,
        witnesses,
        anomalies,
    })
}
