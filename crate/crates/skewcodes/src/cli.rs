//! Command-line front end: construct self-dual generators, verify a
//! generator polynomial, compute Gray images and distances, and answer
//! the closed-form existence questions. Data goes to stdout (text or
//! JSON per --json); diagnostics and progress go to stderr; the exit
//! status is 0 exactly when no component reported an error.

use crate::chain_ring::{RElement, RingAutomorphism};
use crate::codes::{self, Metric};
use crate::constructor::{self, CodeKind, ConstructOptions};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::gray;
use crate::skew_poly::SkewPoly;
use clap::{Args, Parser, Subcommand};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "skewcodes",
    version,
    about = "Self-dual skew-constacyclic codes over F_q + uF_q (u^2 = 0)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Prime characteristic p (together with --m and --mod)
    #[arg(long)]
    p: Option<u64>,

    /// Extension degree m, so q = p^m
    #[arg(long)]
    m: Option<usize>,

    /// Field modulus coefficients, constant first, comma-separated
    #[arg(long = "mod", value_name = "C0,C1,...")]
    modulus: Option<String>,

    /// Field preset: f4, f8, f9, or f25 (alternative to --p/--m/--mod)
    #[arg(long, conflicts_with_all = ["p", "m", "modulus"])]
    field: Option<String>,

    /// Frobenius power r: the residue automorphism is a ↦ a^(p^r)
    #[arg(long, default_value_t = 1)]
    r: usize,

    /// Unit β scaling the u-component, as a field element (e.g. "1", "-1", "w+1")
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: String,
}

impl RingArgs {
    fn field_spec(&self) -> Result<Arc<FieldSpec>> {
        match (&self.field, self.p, self.m, &self.modulus) {
            (Some(name), None, None, None) => preset(name),
            (None, Some(p), Some(m), Some(mods)) => {
                let coeffs = mods
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::ParseError(format!("bad modulus coefficient: {c}")))
                    })
                    .collect::<Result<Vec<u64>>>()?;
                FieldSpec::new(p, m, coeffs)
            }
            _ => Err(Error::InvalidParameter(
                "specify either --field <preset> or all of --p, --m, --mod".into(),
            )),
        }
    }

    fn automorphism(&self) -> Result<RingAutomorphism> {
        let spec = self.field_spec()?;
        let beta = spec.parse_element(&self.beta)?;
        RingAutomorphism::new(self.r, beta)
    }
}

fn preset(name: &str) -> Result<Arc<FieldSpec>> {
    match name.to_ascii_lowercase().as_str() {
        "f4" => FieldSpec::new(2, 2, vec![1, 1, 1]),
        "f8" => FieldSpec::new(2, 3, vec![1, 1, 0, 1]),
        "f9" => FieldSpec::new(3, 2, vec![1, 0, 1]),
        "f25" => FieldSpec::new(5, 2, vec![2, 0, 1]),
        other => Err(Error::InvalidParameter(format!(
            "unknown field preset {other}; available: f4, f8, f9, f25"
        ))),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct all self-dual twisted-cyclic generators of even length n
    /// reachable through the central factorization
    Construct {
        #[command(flatten)]
        ring: RingArgs,

        /// Code length (must be even)
        #[arg(long)]
        n: usize,

        /// Candidate budget for the factor-set searches
        #[arg(long, default_value_t = constructor::DEFAULT_SEARCH_BUDGET)]
        budget: u128,

        /// Also compute per-generator Hamming and Lee distances
        #[arg(long)]
        distances: bool,

        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },

    /// Verify a generator polynomial: divisibility, both self-duality
    /// identities, the matrix criterion, and the generator matrix
    Verify {
        #[command(flatten)]
        ring: RingArgs,

        /// Code length
        #[arg(long)]
        n: usize,

        /// Shift constant λ as a ring element (1 = cyclic, -1 = negacyclic)
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,

        /// Generator polynomial, e.g. "x^3 + 1+u"
        g: String,

        /// Emit the verdicts as JSON
        #[arg(long)]
        json: bool,
    },

    /// Gray-map a vector, or map a generator's code to its F_q generator
    /// matrix and minimum distances
    Gray {
        #[command(flatten)]
        ring: RingArgs,

        /// Generator polynomial of the code to map (with --n)
        #[arg(long, conflicts_with = "vector")]
        g: Option<String>,

        /// Code length for --g
        #[arg(long)]
        n: Option<usize>,

        /// Map a single vector: comma-separated ring elements, e.g. "1+u,0,w"
        #[arg(long)]
        vector: Option<String>,

        /// Distance metric to report: hamming, lee, or both
        #[arg(long, default_value = "both")]
        metric: String,

        /// Codeword budget for the distance scans
        #[arg(long, default_value_t = codes::DEFAULT_DISTANCE_BUDGET)]
        budget: u128,

        /// Emit JSON
        #[arg(long)]
        json: bool,
    },

    /// Existence verdicts from the closed-form criteria
    Exists {
        /// Prime characteristic p
        #[arg(long)]
        p: u64,

        /// Extension degree m
        #[arg(long)]
        m: usize,

        /// Half-length k (the code length is n = 2k)
        #[arg(long)]
        k: Option<u128>,

        /// Ask the order-obstruction question for length --n instead
        #[arg(long)]
        obstruction: bool,

        /// Code length n for --obstruction
        #[arg(long)]
        n: Option<u128>,

        /// Ask the skew-binomial criterion instead (needs --r and --kind)
        #[arg(long)]
        binomial: bool,

        /// Frobenius power r for --binomial
        #[arg(long)]
        r: Option<usize>,

        /// Code kind for --binomial: cyclic or negacyclic
        #[arg(long, default_value = "cyclic")]
        kind: String,

        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_error = e.use_stderr();
            let _ = e.print();
            return if is_error { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Construct {
            ring,
            n,
            budget,
            distances,
            json,
        } => cmd_construct(&ring, n, budget, distances, json),
        Command::Verify {
            ring,
            n,
            lambda,
            g,
            json,
        } => cmd_verify(&ring, n, &lambda, &g, json),
        Command::Gray {
            ring,
            g,
            n,
            vector,
            metric,
            budget,
            json,
        } => cmd_gray(
            &ring,
            g.as_deref(),
            n,
            vector.as_deref(),
            &metric,
            budget,
            json,
        ),
        Command::Exists {
            p,
            m,
            k,
            obstruction,
            n,
            binomial,
            r,
            kind,
            json,
        } => cmd_exists(p, m, k, obstruction, n, binomial, r, &kind, json),
    }
}

fn poly_list(polys: &[SkewPoly]) -> String {
    polys
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",  ")
}

fn cmd_construct(
    ring: &RingArgs,
    n: usize,
    budget: u128,
    distances: bool,
    json: bool,
) -> Result<()> {
    let aut = ring.automorphism()?;
    eprintln!(
        "constructing self-dual generators: n={n} over {} (r={}, beta={})",
        aut.spec(),
        aut.r(),
        aut.beta()
    );
    let opts = ConstructOptions {
        search_budget: budget,
        compute_distances: distances,
        ..ConstructOptions::default()
    };
    let report = constructor::construct_selfdual(n, &aut, &opts)?;
    if json {
        println!("{}", report.to_json());
        return Ok(());
    }
    println!(
        "length n = {n} over {}, automorphism r = {}, beta = {} (order {})",
        aut.spec(),
        aut.r(),
        aut.beta(),
        aut.order()
    );
    println!("central factors of x^{n} - 1:");
    for f in report.factorization().lifted() {
        println!("  {f}");
    }
    for (i, set) in report.candidate_sets().iter().enumerate() {
        println!("G{} ({} members): {}", i + 1, set.len(), poly_list(set));
    }
    println!("generators ({}):", report.generators().len());
    for (g, ok) in report.generators().iter().zip(report.verified()) {
        println!("  {g}  [verified: {ok}]");
    }
    if let Some(list) = report.distances() {
        for (g, (h, l)) in report.generators().iter().zip(list) {
            println!("  {g}: d_hamming = {h}, d_lee = {l}");
        }
    }
    println!(
        "alternate reading (lclm of the g_i) agrees: {}",
        report.readings_agree()
    );
    if !report.rejected().is_empty() {
        println!(
            "rejected candidates ({}): {}",
            report.rejected().len(),
            poly_list(report.rejected())
        );
    }
    if report.skipped_tuples() > 0 {
        println!(
            "skipped tuples (lclm not expressible over unit coefficients): {}",
            report.skipped_tuples()
        );
    }
    Ok(())
}

fn cmd_verify(ring: &RingArgs, n: usize, lambda: &str, g_text: &str, json: bool) -> Result<()> {
    let aut = ring.automorphism()?;
    let spec = aut.spec();
    let lambda = RElement::parse(spec, lambda)?;
    let g = SkewPoly::parse(&aut, g_text)?;
    let modulus = SkewPoly::x_pow_minus(&aut, n, &lambda)?;
    let divides = modulus.is_right_divisible_by(&g)?;
    let identity = codes::check_selfdual_condition(&g, n, &lambda)?;
    let reciprocal = g.mul(&g.monic_skew_reciprocal()?)? == modulus;
    let code = codes::generator_matrix_from(&g, n)?.with_lambda(lambda.clone());
    let matrix_ok = codes::is_hermitian_self_dual(&code)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "n": n,
                "g": g.to_string(),
                "lambda": lambda.to_string(),
                "divides": divides,
                "selfdual_identity": identity,
                "reciprocal_product": reciprocal,
                "matrix_criterion": matrix_ok,
                "generator_matrix": code.matrix_json(),
            })
        );
        return Ok(());
    }
    println!("g = {g}   (length {n}, lambda = {lambda})");
    println!("right-divides x^{n} - lambda:          {divides}");
    println!("self-duality identity (second factor): {identity}");
    println!("reciprocal product g*g~ = x^{n}-lambda: {reciprocal}");
    println!("matrix criterion (self-dual code):     {matrix_ok}");
    println!("generator matrix ({} x {}):", code.rows().len(), n);
    for row in code.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  {}", cells.join("  "));
    }
    Ok(())
}

fn parse_metric(metric: &str) -> Result<Vec<Metric>> {
    match metric.to_ascii_lowercase().as_str() {
        "both" => Ok(vec![Metric::Hamming, Metric::Lee]),
        other => Ok(vec![other.parse()?]),
    }
}

fn cmd_gray(
    ring: &RingArgs,
    g_text: Option<&str>,
    n: Option<usize>,
    vector: Option<&str>,
    metric: &str,
    budget: u128,
    json: bool,
) -> Result<()> {
    let aut = ring.automorphism()?;
    let spec = aut.spec();
    if let Some(vector) = vector {
        let v: Vec<RElement> = vector
            .split(',')
            .map(|s| RElement::parse(spec, s.trim()))
            .collect::<Result<_>>()?;
        let image = gray::gray_map(&v)?;
        let weight = gray::lee_weight(&v)?;
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "input": v.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "image": image.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "lee_weight": weight,
                })
            );
        } else {
            let cells: Vec<String> = image.iter().map(|e| e.to_string()).collect();
            println!("{}", cells.join(", "));
            println!("lee weight: {weight}");
        }
        return Ok(());
    }
    let (Some(g_text), Some(n)) = (g_text, n) else {
        return Err(Error::InvalidParameter(
            "gray needs either --vector, or --g with --n".into(),
        ));
    };
    let g = SkewPoly::parse(&aut, g_text)?;
    let code = codes::generator_matrix_from(&g, n)?;
    let matrix = code.gray_generator_matrix()?;
    let rank = matrix.len();
    eprintln!(
        "scanning {} codewords for distances",
        spec.q()?.pow(rank as u32)
    );
    let mut dists = Vec::new();
    for m in parse_metric(metric)? {
        dists.push((m, codes::min_distance(&code, m, budget)?));
    }
    if json {
        let mut dmap = serde_json::Map::new();
        for (m, d) in &dists {
            dmap.insert(m.to_string(), serde_json::json!(d));
        }
        println!(
            "{}",
            serde_json::json!({
                "n": n,
                "g": g.to_string(),
                "image_length": 2 * n,
                "image_dimension": rank,
                "matrix": matrix
                    .iter()
                    .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "distances": dmap,
            })
        );
        return Ok(());
    }
    println!(
        "gray image of <{g}> at length {n}: a [{}, {rank}] code over F_{}",
        2 * n,
        spec.q()?
    );
    println!("generator matrix ({rank} x {}):", 2 * n);
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  {}", cells.join("  "));
    }
    for (m, d) in &dists {
        println!("minimum {m} distance of the source code: {d}");
    }
    if let Some((_, lee)) = dists.iter().find(|(m, _)| *m == Metric::Lee) {
        println!("(the Gray image's Hamming distance equals the source Lee distance: {lee})");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_exists(
    p: u64,
    m: usize,
    k: Option<u128>,
    obstruction: bool,
    n: Option<u128>,
    binomial: bool,
    r: Option<usize>,
    kind: &str,
    json: bool,
) -> Result<()> {
    if obstruction {
        let n = n.ok_or_else(|| Error::InvalidParameter("--obstruction needs --n".into()))?;
        let obstructed = constructor::order_obstruction(n, p, m)?;
        let rule = "an even multiplicative order of p^m modulo n rules out \
                    non-trivial self-dual twisted-cyclic codes";
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "question": "order_obstruction",
                    "n": n, "p": p, "m": m,
                    "obstructed": obstructed,
                    "rule": rule,
                })
            );
        } else {
            println!(
                "length {n}, q = {p}^{m}: {}",
                if obstructed {
                    "obstructed"
                } else {
                    "not obstructed"
                }
            );
            println!("rule: {rule}");
        }
        return Ok(());
    }
    if binomial {
        let r = r.ok_or_else(|| Error::InvalidParameter("--binomial needs --r".into()))?;
        let k = k.ok_or_else(|| Error::InvalidParameter("--binomial needs --k".into()))?;
        let kind: CodeKind = kind.parse()?;
        let answer = constructor::exists_binomial(p, m, r, k, kind)?;
        let rule = match kind {
            CodeKind::Cyclic => "binomial cyclic: p ≡ 3 (mod 4), k and m even, r odd",
            CodeKind::Negacyclic => {
                "binomial negacyclic: k odd and (p ≡ 1 (mod 4), or p ≡ 3 (mod 4) with m and r even)"
            }
        };
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "question": "binomial",
                    "p": p, "m": m, "r": r, "k": k, "kind": kind.to_string(),
                    "exists": answer,
                    "rule": rule,
                })
            );
        } else {
            println!("skew binomial, {kind}, p={p}, m={m}, r={r}, k={k}: {answer}");
            println!("rule: {rule}");
        }
        return Ok(());
    }
    let k = k.ok_or_else(|| Error::InvalidParameter("exists needs --k".into()))?;
    let cyclic = constructor::exists_theta_cyclic(p, m, k)?;
    let negacyclic = constructor::exists_theta_negacyclic(p, m, k)?;
    let cyclic_rule = if p == 2 {
        "even characteristic: self-dual twisted-cyclic codes exist for every k"
    } else if k % 2 == 0 {
        "odd p, even k: exists iff p^m ≡ 1 (mod 4)"
    } else {
        "odd p, odd k: only the negacyclic variant is settled"
    };
    let nega_rule = if p == 2 {
        "even characteristic: x^n - 1 = x^n + 1, same as the cyclic question"
    } else if k % 2 == 1 {
        "odd p, odd k: self-dual twisted-negacyclic codes always exist"
    } else {
        "odd p, even k: not settled by the known criteria"
    };
    if json {
        println!(
            "{}",
            serde_json::json!({
                "question": "theta_selfdual",
                "p": p, "m": m, "k": k,
                "cyclic": cyclic.to_string(),
                "negacyclic": negacyclic.to_string(),
                "rules": {"cyclic": cyclic_rule, "negacyclic": nega_rule},
            })
        );
    } else {
        println!("p = {p}, m = {m}, k = {k} (length n = {})", 2 * k);
        println!("theta-cyclic:     {cyclic}");
        println!("  rule: {cyclic_rule}");
        println!("theta-negacyclic: {negacyclic}");
        println!("  rule: {nega_rule}");
    }
    Ok(())
}
