use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use subword_core::entropy::{maxocc_lower_bound, maxocc_upper_bound, maxocc_with};
use subword_core::genfunc::{gf_construct_with, gf_series, occ_table_periodic_with, GfLimits, OccMatrix};
use subword_core::search::{run_search, LocalSearchParams, SearchConfig, SearchRun};
use subword_core::table1::golden_row;
use subword_core::{
    insertion_extend, local_search_adaptive, occ_dp, occ_runs, EntropyError, GfError, MaxoccOptions, OccCache, RunTuple,
    SearchError, SearchResult, Word,
};

use crate::output::{bits, line, Failure, Record};
use crate::{Algo, Engine, GfFormat, Global, TableFormat};

/// A word given either as letters (`0110`) or as runs (`0:1,2,1`).
pub fn parse_word_arg(s: &str) -> Result<Word, Failure> {
    let s = s.trim();
    if s.contains(':') {
        s.parse::<RunTuple>().map(|r| r.to_word()).map_err(|e| Failure::parse(format!("{s:?}: {e}")))
    } else {
        s.parse::<Word>().map_err(|e| Failure::parse(format!("{s:?}: {e}")))
    }
}

fn limits(g: &Global) -> GfLimits {
    GfLimits { max_v_len: g.max_v_len, series_budget: g.series_budget }
}

fn gf_failure(e: GfError) -> Failure {
    match e {
        GfError::Parse { .. }
        | GfError::EmptyWord
        | GfError::CompositionCap { .. }
        | GfError::BudgetExceeded { .. } => Failure::parse(e),
        _ => Failure::check(e),
    }
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::LengthOutOfRange { .. } | SearchError::EmptyInput | SearchError::MixedLengths => Failure::parse(e),
        _ => Failure::check(e),
    }
}

fn entropy_failure(e: EntropyError) -> Failure {
    Failure::parse(e)
}

fn secs(d: Duration) -> Value {
    json!(d.as_secs_f64())
}

pub fn occ(g: &Global, word: &str, subword: &str, algo: Algo) -> Result<(), Failure> {
    let (w, u) = (parse_word_arg(word)?, parse_word_arg(subword)?);
    let mut rec = Record::new("occ").input("word", w.to_string()).input("subword", u.to_string());
    let dp = || {
        let t = Instant::now();
        (occ_dp(&w, &u), t.elapsed())
    };
    let runs = || {
        let cache = OccCache::new(g.cache_threshold);
        let t = Instant::now();
        (occ_runs(&w, &u, &cache), t.elapsed())
    };
    match algo {
        Algo::Dp => {
            let (c, t) = dp();
            rec.result("count", c.to_string());
            rec.stat("dp_secs", secs(t));
        }
        Algo::Runs => {
            let (c, t) = runs();
            rec.result("count", c.to_string());
            rec.stat("runs_secs", secs(t));
        }
        Algo::Both => {
            let ((a, ta), (b, tb)) = (dp(), runs());
            rec.result("count", a.to_string());
            rec.result("agree", a == b);
            rec.stat("dp_secs", secs(ta));
            rec.stat("runs_secs", secs(tb));
            if a != b {
                rec.result("runs_count", b.to_string());
                rec.print(g);
                return Err(Failure::check(format!("counters disagree: dynamic program {a}, run-length {b}")));
            }
        }
    }
    rec.print(g);
    Ok(())
}

pub fn maxocc(g: &Global, word: &str, engine: Engine, half_length: bool, max_witnesses: usize) -> Result<(), Failure> {
    let w = parse_word_arg(word)?;
    let opts = MaxoccOptions { assume_half_length: half_length, max_witnesses, engine: engine.into(), ..Default::default() };
    let t = Instant::now();
    let r = maxocc_with(&w, &opts).map_err(entropy_failure)?;
    let mut rec = Record::new("maxocc")
        .input("word", w.to_string())
        .input("engine", format!("{engine:?}").to_lowercase())
        .input("half_length", half_length);
    rec.result("maxocc", r.maxocc.to_string());
    rec.result("entropy", bits(r.entropy_bits));
    rec.result("entropy_per_letter", bits(r.entropy_bits / w.len() as f64));
    rec.result("witnesses", r.witnesses.iter().map(|u| u.to_string()).collect::<Vec<_>>());
    rec.result("truncated", r.truncated);
    rec.result("heuristic", r.heuristic);
    rec.result("runs", w.runs().to_string());
    rec.stat("secs", secs(t.elapsed()));
    rec.print(g);
    Ok(())
}

pub fn bounds(g: &Global, n: usize, k: u32) -> Result<(), Failure> {
    let lower = maxocc_lower_bound(n, k).map_err(entropy_failure)?;
    let upper = maxocc_upper_bound(n).map_err(entropy_failure)?;
    let mut rec = Record::new("bounds").input("n", n).input("k", k);
    rec.result("lower", lower.value.to_string());
    rec.result("lower_ceil", lower.ceil().to_string());
    rec.result("lower_length", lower.length);
    rec.result("lower_entropy", bits(lower.to_f64().log2()));
    rec.result("upper", upper.to_string());
    rec.result("upper_entropy", bits(upper.log2()));
    rec.print(g);
    Ok(())
}

pub struct SearchOpts {
    pub threads: usize,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub timeout: Option<f64>,
    pub hints: bool,
    pub symmetry: bool,
    pub engine: Engine,
    pub chunk_size: u64,
    pub max_n: usize,
}

fn achievers_json(r: &SearchResult) -> Value {
    r.achievers
        .iter()
        .map(|a| {
            json!({
                "word": a.word.to_string(),
                "runs": a.runs,
                "witnesses": a.witnesses.iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn search(g: &Global, n: usize, opts: &SearchOpts) -> Result<SearchRun, Failure> {
    let config = SearchConfig {
        workers: opts.threads,
        chunk_size: opts.chunk_size,
        use_hints: opts.hints,
        skip_symmetric: opts.symmetry,
        engine: opts.engine.into(),
        cache_threshold: g.cache_threshold,
        max_n: opts.max_n,
        checkpoint: opts.checkpoint.clone(),
        resume: opts.resume,
        deadline: opts.timeout.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
        ..SearchConfig::default()
    };
    run_search(n, &config).map_err(search_failure)
}

pub fn minentropy(g: &Global, n: usize, opts: &SearchOpts) -> Result<(), Failure> {
    let mut rec = Record::new("minentropy")
        .input("n", n)
        .input("threads", opts.threads)
        .input("hints", opts.hints)
        .input("symmetry", opts.symmetry)
        .input("engine", format!("{:?}", opts.engine).to_lowercase());
    if let Some(p) = &opts.checkpoint {
        rec = rec.input("checkpoint", p.display().to_string()).input("resume", opts.resume);
    }
    match search(g, n, opts)? {
        SearchRun::Completed(r) => {
            rec.result("status", "complete");
            rec.result("min_maxocc", r.min_maxocc.to_string());
            rec.result("entropy", bits(r.min_entropy_bits));
            rec.result("entropy_per_letter", bits(r.entropy_per_letter()));
            rec.result("achievers", achievers_json(&r));
            rec.stat("search", serde_json::to_value(&r.stats).expect("stats serialize"));
            rec.print(g);
            Ok(())
        }
        SearchRun::Interrupted { checkpoint, stats } => {
            rec.result("status", "interrupted");
            rec.result("bound", checkpoint.bound.as_ref().map(|b| b.to_string()));
            rec.result("ranges", checkpoint.ranges.len());
            rec.stat("search", serde_json::to_value(&stats).expect("stats serialize"));
            rec.print(g);
            let saved = match &opts.checkpoint {
                Some(p) => format!("state saved to {}", p.display()),
                None => "no checkpoint file given, progress is lost".into(),
            };
            Err(Failure::timeout(format!("time limit reached; {saved}")))
        }
    }
}

pub fn heuristic(g: &Global, n: usize, seed: u64, start: Option<&str>, max_flip_rate: f64, attempts: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::parse("length must be at least 1"));
    }
    let start = match start {
        Some(s) => {
            let w = parse_word_arg(s)?;
            if w.len() != n {
                return Err(Failure::parse(format!("start word has length {}, expected {n}", w.len())));
            }
            w
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Word::from_letters(&(0..n).map(|_| rng.random_range(0..2u8)).collect::<Vec<_>>())
        }
    };
    let params = LocalSearchParams { max_flip_rate, attempts_per_rate: attempts, rng_seed: seed };
    let t = Instant::now();
    let (w, value) = local_search_adaptive(&start, &params).map_err(search_failure)?;
    let mut rec = Record::new("heuristic").input("n", n).input("seed", seed).input("start", start.to_string());
    rec.result("word", w.to_string());
    rec.result("maxocc", value.to_string());
    rec.result("entropy", bits(value.log2()));
    rec.result("entropy_per_letter", bits(value.log2() / n as f64));
    rec.result("runs", w.num_runs());
    if let Some(row) = golden_row(n) {
        rec.result("published_min", row.maxocc.to_string());
    }
    rec.stat("secs", secs(t.elapsed()));
    rec.print(g);
    Ok(())
}

fn read_word_file(path: &Path) -> Result<Vec<String>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

pub fn extend(g: &Global, words: &[String], from_file: Option<&Path>) -> Result<(), Failure> {
    let mut all = words.to_vec();
    if let Some(p) = from_file {
        all.extend(read_word_file(p)?);
    }
    let parsed = all.iter().map(|s| parse_word_arg(s)).collect::<Result<Vec<_>, _>>()?;
    let t = Instant::now();
    let (w, value) = insertion_extend(&parsed).map_err(search_failure)?;
    let n = w.len();
    let mut rec = Record::new("extend").input("words", parsed.iter().map(|w| w.to_string()).collect::<Vec<_>>());
    rec.result("word", w.to_string());
    rec.result("maxocc", value.to_string());
    rec.result("entropy", bits(value.log2()));
    rec.result("entropy_per_letter", bits(value.log2() / n as f64));
    if let Some(row) = golden_row(n) {
        rec.result("published_min", row.maxocc.to_string());
    }
    rec.stat("secs", secs(t.elapsed()));
    rec.print(g);
    Ok(())
}

fn matrix_json(m: &OccMatrix) -> Value {
    m.table.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect()
}

pub fn gf(
    g: &Global,
    w: &str,
    v: &str,
    verify: Option<usize>,
    series: Option<(usize, usize)>,
    format: GfFormat,
) -> Result<(), Failure> {
    let (w, v) = (parse_word_arg(w)?, parse_word_arg(v)?);
    let lim = limits(g);
    let t = Instant::now();
    let f = gf_construct_with(&w, &v, &lim).map_err(gf_failure)?;
    let built = t.elapsed();

    let mut failed = None;
    let mut rec = Record::new("gf").input("w", w.to_string()).input("v", v.to_string());
    rec.result("gf", f.to_string());
    rec.result("numerator", f.numerator().to_string());
    rec.result("denominator", f.denominator().to_string());
    rec.result("coefficients", f.to_json());
    rec.stat("construct_secs", secs(built));
    if let Some(size) = verify {
        let s = gf_series(&f, size, size).map_err(gf_failure)?;
        let table = occ_table_periodic_with(&w, &v, size, size, &lim).map_err(gf_failure)?;
        let ok = s.same_values(&table);
        rec.result("verified", ok);
        rec = rec.input("verify_size", size);
        if !ok {
            failed = Some(format!("series of the generating function differs from direct counts within {size}x{size}"));
        }
    }
    if let Some((m, r)) = series {
        let s = gf_series(&f, m, r).map_err(gf_failure)?;
        rec.result("series", matrix_json(&s));
    }
    match format {
        GfFormat::Json => rec.print(g),
        GfFormat::Text => {
            line(&f.to_string());
            if let Some(ok) = verify.map(|_| failed.is_none()) {
                line(if ok { "verify: pass" } else { "verify: FAIL" });
            }
        }
    }
    failed.map_or(Ok(()), |m| Err(Failure::check(m)))
}

struct TableRow {
    n: usize,
    result: SearchResult,
    secs: f64,
    matches_published: Option<bool>,
}

fn published_match(r: &SearchResult) -> Option<bool> {
    let row = golden_row(r.n)?;
    let got: BTreeSet<Word> = r.achievers.iter().map(|a| a.word.symmetry_class_representative()).collect();
    let want: BTreeSet<Word> = row
        .words
        .iter()
        .map(|s| s.parse::<Word>().expect("published words are valid").symmetry_class_representative())
        .collect();
    Some(r.min_maxocc == row.maxocc && got == want)
}

pub fn table(g: &Global, from: usize, to: usize, format: TableFormat, threads: usize, verify: bool) -> Result<(), Failure> {
    if from == 0 || from > to {
        return Err(Failure::parse(format!("invalid range {from}..={to}")));
    }
    let opts = SearchOpts {
        threads,
        checkpoint: None,
        resume: false,
        timeout: None,
        hints: true,
        symmetry: true,
        engine: Engine::Prefix,
        chunk_size: subword_core::search::DEFAULT_CHUNK_SIZE,
        max_n: subword_core::search::DEFAULT_MAX_N.max(to),
    };
    let mut rows = Vec::new();
    for n in from..=to {
        let t = Instant::now();
        let result = match search(g, n, &opts)? {
            SearchRun::Completed(r) => r,
            SearchRun::Interrupted { .. } => unreachable!("no time limit set"),
        };
        let matches_published = published_match(&result);
        rows.push(TableRow { n, result, secs: t.elapsed().as_secs_f64(), matches_published });
    }

    match format {
        TableFormat::Csv => {
            line("n,words,maxocc,entropy,entropy_per_letter,runs");
            for row in &rows {
                let r = &row.result;
                let words: Vec<String> = r.achievers.iter().map(|a| a.word.to_string()).collect();
                let runs: Vec<String> = r.achievers.iter().map(|a| a.runs.to_string()).collect();
                line(&format!(
                    "{},{},{},{:.3},{:.3},{}",
                    row.n,
                    words.join(" "),
                    r.min_maxocc,
                    r.min_entropy_bits,
                    r.entropy_per_letter(),
                    runs.join(" ")
                ));
            }
        }
        TableFormat::Json => {
            let mut rec = Record::new("table").input("from", from).input("to", to);
            let out: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let r = &row.result;
                    json!({
                        "n": row.n,
                        "min_maxocc": r.min_maxocc.to_string(),
                        "entropy": bits(r.min_entropy_bits),
                        "entropy_per_letter": bits(r.entropy_per_letter()),
                        "achievers": achievers_json(r),
                        "matches_published": row.matches_published,
                    })
                })
                .collect();
            rec.result("rows", out);
            rec.stat("row_secs", rows.iter().map(|r| r.secs).collect::<Vec<_>>());
            rec.print(g);
        }
    }
    if verify {
        let bad: Vec<String> = rows.iter().filter(|r| r.matches_published == Some(false)).map(|r| r.n.to_string()).collect();
        if !bad.is_empty() {
            return Err(Failure::check(format!("rows differ from the published table at n = {}", bad.join(", "))));
        }
    }
    Ok(())
}
