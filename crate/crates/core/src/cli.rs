//! Command-line front end. `main.rs` only forwards to [`run`].

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{
    census, classify_batch, cocke_ho_word, engel, Bracket, ClassifyOptions, Conjugation,
    DEFAULT_CENSUS_MAX,
};
use crate::group::{
    catalog, catalog_list, chirality_witness, image, is_inverse_closed, FiniteGroup,
    DEFAULT_EVAL_CAP, DEFAULT_SWEEP,
};
use crate::morphism::{CertificateKind, Endomorphism, InversionCertificate};
use crate::report::{
    verify_report, CensusSummary, CertificateReport, ImageReport, ItemReport, OrbitReport, Report,
    WitnessReport,
};
use crate::whitehead::{orbit_equivalent, SearchStats, WhiteheadError, DEFAULT_BUDGET};
use crate::word::{parse, parse_infer, Word};

#[derive(Debug, Parser)]
#[command(
    name = "wordchir",
    version,
    about = "Chirality of words in free groups"
)]
pub struct Cli {
    /// Worker threads (1 gives single-worker mode).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline on each word.
    Classify(ClassifyArgs),
    /// Aut(F_n) orbit query; the target defaults to the inverse word.
    Whitehead(WhiteheadArgs),
    /// List the image of the word map on one finite group.
    Image(ImageArgs),
    /// Sweep a group catalog for a chirality witness.
    Witness(WitnessArgs),
    /// Classify every reduced rank-2 word of one length.
    Enumerate(EnumerateArgs),
    /// Generate and classify Engel words e_1..e_N.
    Engel(EngelArgs),
    /// Check a user-supplied endomorphism as an inversion certificate.
    Certify(CertifyArgs),
    /// Re-verify all certificates in a report file.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConjArg {
    /// g^h = h^-1 g h
    Left,
    /// g^h = h g h^-1
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BracketArg {
    /// [a, b] = a b a^-1 b^-1
    Standard,
    /// [a, b] = a^-1 b^-1 a b
    Inverse,
}

impl From<ConjArg> for Conjugation {
    fn from(c: ConjArg) -> Self {
        match c {
            ConjArg::Left => Conjugation::Left,
            ConjArg::Right => Conjugation::Right,
        }
    }
}

impl From<BracketArg> for Bracket {
    fn from(b: BracketArg) -> Self {
        match b {
            BracketArg::Standard => Bracket::Standard,
            BracketArg::Inverse => Bracket::Inverse,
        }
    }
}

/// Word inputs. Besides the word syntax, `@engel:N` and `@cocke-ho[:K]`
/// expand to generated words.
#[derive(Debug, Clone, Args)]
pub struct WordInput {
    /// Word such as "x1 x2^-1" or "abAB" (repeatable).
    #[arg(long = "word", short = 'w')]
    pub words: Vec<String>,
    /// File with one word per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    pub words_file: Option<PathBuf>,
    /// Free group rank; inferred from the inputs when omitted.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Conjugation convention for generated words.
    #[arg(long, value_enum, default_value = "left")]
    pub conj: ConjArg,
    /// Commutator convention for generated words.
    #[arg(long, value_enum, default_value = "standard")]
    pub bracket: BracketArg,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Whitehead search budget in nodes.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_usize)]
    pub budget: usize,
    /// Maximum tuples evaluated per word-map image.
    #[arg(long, default_value_t = DEFAULT_EVAL_CAP, value_parser = positive_u64)]
    pub cap: u64,
    /// Group catalog: preset (default, abelian, surjectivity) or names like "S3,D4,C2xS3".
    #[arg(long, default_value = DEFAULT_SWEEP)]
    pub catalog: String,
    /// Run the witness sweep even for certified words.
    #[arg(long)]
    pub always_sweep: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: WordInput,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WhiteheadArgs {
    #[command(flatten)]
    pub input: WordInput,
    /// Target word; defaults to the inverse of each input word.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_usize)]
    pub budget: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ImageArgs {
    #[command(flatten)]
    pub input: WordInput,
    /// Catalog name or path to a Cayley table file.
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = DEFAULT_EVAL_CAP, value_parser = positive_u64)]
    pub cap: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub input: WordInput,
    #[arg(long, default_value = DEFAULT_SWEEP)]
    pub catalog: String,
    #[arg(long, default_value_t = DEFAULT_EVAL_CAP, value_parser = positive_u64)]
    pub cap: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Word length.
    #[arg(long)]
    pub length: usize,
    /// Refuse lengths above this.
    #[arg(long, default_value_t = DEFAULT_CENSUS_MAX)]
    pub max_length: usize,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Omit the per-word items (and their certificates) from the report.
    #[arg(long)]
    pub summary_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EngelArgs {
    /// Highest index N.
    #[arg(long, short = 'n')]
    pub n: usize,
    #[arg(long, value_enum, default_value = "standard")]
    pub bracket: BracketArg,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub input: WordInput,
    /// Endomorphism in the `xi -> word` text format.
    #[arg(long)]
    pub endo_file: PathBuf,
    /// Optional two-sided inverse, making this an automorphism certificate.
    #[arg(long)]
    pub inverse_file: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Report file produced by any subcommand.
    pub report: PathBuf,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u64(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A parsed input word together with the text it came from.
#[derive(Debug, Clone)]
pub struct InputWord {
    pub source: String,
    pub word: Word,
}

fn expand_preset(text: &str, input: &WordInput) -> Result<Option<Word>> {
    let Some(rest) = text.strip_prefix('@') else {
        return Ok(None);
    };
    let (name, arg) = rest.split_once(':').unwrap_or((rest, ""));
    let word = match name {
        "engel" => {
            let n: usize = arg
                .parse()
                .context("@engel needs an index, e.g. @engel:3")?;
            if n == 0 {
                bail!("@engel index must be at least 1");
            }
            engel(n, input.bracket.into())
        }
        "cocke-ho" => {
            let k: i64 = if arg.is_empty() {
                440
            } else {
                arg.parse()
                    .context("@cocke-ho exponent must be an integer")?
            };
            cocke_ho_word(k, input.conj.into())
        }
        other => bail!("unknown preset `@{other}`"),
    };
    Ok(Some(word))
}

/// Reads and parses every word input. All parse errors are reported at once,
/// with line numbers for file inputs.
pub fn read_words(input: &WordInput) -> Result<Vec<InputWord>> {
    let mut texts: Vec<(String, String)> = input
        .words
        .iter()
        .enumerate()
        .map(|(i, w)| (format!("--word #{}", i + 1), w.clone()))
        .collect();
    if let Some(path) = &input.words_file {
        let content =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        for (i, line) in content.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            texts.push((format!("{}:{}", path.display(), i + 1), line.to_string()));
        }
    }
    if texts.is_empty() {
        bail!("no input words (use --word or --words-file)");
    }

    let mut errors = String::new();
    let mut staged = Vec::new();
    for (origin, text) in &texts {
        let staged_word = match expand_preset(text, input) {
            Ok(Some(w)) => Ok(w),
            Ok(None) => parse_infer(text).map_err(anyhow::Error::from),
            Err(e) => Err(e),
        };
        match staged_word {
            Ok(w) => staged.push((text.clone(), w)),
            Err(e) => writeln!(errors, "  {origin}: {e:#}").unwrap(),
        }
    }
    if !errors.is_empty() {
        bail!("could not parse input words:\n{}", errors.trim_end());
    }

    let needed = staged.iter().map(|(_, w)| w.rank()).max().unwrap_or(1);
    let rank = match input.rank {
        Some(0) => bail!("--rank must be positive"),
        Some(r) if r < needed => {
            bail!("--rank {r} is below the largest generator index {needed} in the inputs")
        }
        Some(r) => r,
        None => needed,
    };
    staged
        .into_iter()
        .map(|(source, w)| {
            let word = w.with_rank(rank)?;
            Ok(InputWord { source, word })
        })
        .collect()
}

fn options(search: &SearchArgs, census_max_length: usize) -> Result<ClassifyOptions> {
    Ok(ClassifyOptions {
        budget: search.budget,
        eval_cap: search.cap,
        catalog: catalog_list(&search.catalog)?,
        always_sweep: search.always_sweep,
        census_max_length,
    })
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| spec.to_string());
        Ok(FiniteGroup::parse_table_text(&name, &text)
            .with_context(|| format!("Cayley table {}", path.display()))?)
    } else {
        Ok(catalog(spec)?)
    }
}

fn classify_items(inputs: &[InputWord], opts: &ClassifyOptions) -> Vec<ItemReport> {
    let words: Vec<Word> = inputs.iter().map(|i| i.word.clone()).collect();
    classify_batch(&words, opts)
        .into_iter()
        .zip(inputs)
        .enumerate()
        .map(|(i, (res, input))| match res {
            Ok(v) => ItemReport::from_verdict(i, &input.source, &v),
            Err(e) => ItemReport::from_error(i, &input.source, Some(&input.word), &e),
        })
        .collect()
}

fn item_line(item: &ItemReport) -> String {
    let status = match (&item.status, &item.error) {
        (Some(s), _) => format!("{s:?}"),
        (None, Some(e)) => format!("error: {e}"),
        (None, None) => "?".into(),
    };
    let rules: Vec<String> = item
        .reasons
        .iter()
        .filter_map(|r| {
            let rule = r.get("rule")?.as_str()?;
            let outcome = r.get("outcome")?.as_str()?;
            Some(format!("{rule}:{outcome}"))
        })
        .collect();
    format!(
        "{}\t{}\t{}\t{}",
        item.index,
        item.word,
        status,
        rules.join(",")
    )
}

fn emit(report: &Report, out: Option<&Path>, summary: &str) -> Result<()> {
    print!("{summary}");
    if let Some(path) = out {
        std::fs::write(path, report.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
        println!("report written to {}", path.display());
    }
    Ok(())
}

fn run_classify(args: &ClassifyArgs) -> Result<()> {
    let inputs = read_words(&args.input)?;
    let opts = options(&args.search, DEFAULT_CENSUS_MAX)?;
    let mut report = Report::new("classify");
    report.items = classify_items(&inputs, &opts);
    let summary: String = report.items.iter().map(|i| item_line(i) + "\n").collect();
    emit(&report, args.out.as_deref(), &summary)
}

fn run_whitehead(args: &WhiteheadArgs) -> Result<()> {
    let inputs = read_words(&args.input)?;
    let rank = inputs[0].word.rank();
    let target = args
        .target
        .as_deref()
        .map(|t| parse(t, rank).with_context(|| format!("--target `{t}`")))
        .transpose()?;
    let mut report = Report::new("whitehead");
    let mut summary = String::new();
    for input in &inputs {
        let u = &input.word;
        let v = target.clone().unwrap_or_else(|| u.invert());
        let orbit = match orbit_equivalent(u, &v, args.budget) {
            Ok(r) => OrbitReport::from_result(u, &v, args.budget, &r),
            Err(WhiteheadError::Indeterminate { nodes_explored, .. }) => {
                let stats = SearchStats {
                    nodes_explored,
                    ..SearchStats::default()
                };
                OrbitReport::indeterminate(u, &v, args.budget, stats)
            }
            Err(e) => return Err(e).with_context(|| format!("word `{}`", input.source)),
        };
        let found = match orbit.found {
            Some(true) => "found",
            Some(false) => "not-found",
            None => "indeterminate",
        };
        writeln!(
            summary,
            "{} -> {}\t{found}\tminimal_length={}\tnodes={}",
            orbit.source,
            orbit.target,
            orbit
                .minimal_length
                .map_or_else(|| "?".to_string(), |m| m.to_string()),
            orbit.nodes_explored
        )?;
        if let Some(a) = &orbit.automorphism {
            summary.push_str(a);
        }
        report.orbits.push(orbit);
    }
    emit(&report, args.out.as_deref(), &summary)
}

fn run_image(args: &ImageArgs) -> Result<()> {
    let inputs = read_words(&args.input)?;
    let group = load_group(&args.group)?;
    let mut report = Report::new("image");
    let mut summary = String::new();
    for input in &inputs {
        let set = image(&group, &input.word, args.cap)
            .with_context(|| format!("word `{}`", input.source))?;
        let members: Vec<usize> = set.members.iter().copied().collect();
        let labels: Vec<String> = members.iter().map(|&g| group.label(g)).collect();
        let entry = ImageReport {
            group: group.name().to_string(),
            order: group.order(),
            word: input.word.to_string(),
            inverse_closed: is_inverse_closed(&set, &group),
            surjective: members.len() == group.order(),
            members,
            labels,
        };
        writeln!(
            summary,
            "{} on {}: {} of {} elements{{{}}}{}",
            entry.word,
            entry.group,
            entry.members.len(),
            entry.order,
            entry.labels.join(", "),
            if entry.inverse_closed {
                ""
            } else {
                " (not inverse closed)"
            }
        )?;
        report.images.push(entry);
    }
    emit(&report, args.out.as_deref(), &summary)
}

fn run_witness(args: &WitnessArgs) -> Result<()> {
    let inputs = read_words(&args.input)?;
    let groups = catalog_list(&args.catalog)?;
    let mut report = Report::new("witness");
    let mut summary = String::new();
    for input in &inputs {
        let sweep = chirality_witness(&input.word, &groups, args.cap);
        let entry = WitnessReport {
            word: input.word.to_string(),
            witness: sweep.witness,
            checked: sweep.checked,
            skipped: sweep
                .skipped
                .into_iter()
                .map(|(g, e)| (g, e.to_string()))
                .collect(),
        };
        match &entry.witness {
            Some(w) => writeln!(
                summary,
                "{}\twitness {} element {} ({})",
                entry.word, w.group, w.element, w.label
            )?,
            None => writeln!(
                summary,
                "{}\tno witness in {} groups ({} skipped)",
                entry.word,
                entry.checked.len(),
                entry.skipped.len()
            )?,
        }
        report.witnesses.push(entry);
    }
    emit(&report, args.out.as_deref(), &summary)
}

fn run_enumerate(args: &EnumerateArgs) -> Result<()> {
    let opts = options(&args.search, args.max_length)?;
    let c = census(args.length, &opts)?;
    let mut report = Report::new("enumerate");
    let summary_data = CensusSummary::from(&c);
    let mut summary = format!(
        "length {}: {} words (expected {}), {} inverted by an automorphism\n",
        c.length, c.total, c.expected_total, c.aut_invertible
    );
    for (status, n) in &summary_data.histogram {
        writeln!(summary, "  {status}: {n}")?;
    }
    if !summary_data.not_aut_invertible.is_empty() {
        writeln!(
            summary,
            "  not inverted by any automorphism: {}",
            summary_data.not_aut_invertible.len()
        )?;
    }
    if !args.summary_only {
        report.items = c
            .verdicts
            .iter()
            .enumerate()
            .map(|(i, v)| ItemReport::from_verdict(i, &v.word.to_string(), v))
            .collect();
    }
    report.census = Some(summary_data);
    emit(&report, args.out.as_deref(), &summary)
}

fn run_engel(args: &EngelArgs) -> Result<()> {
    if args.n == 0 {
        bail!("-n must be at least 1");
    }
    let opts = options(&args.search, DEFAULT_CENSUS_MAX)?;
    let inputs: Vec<InputWord> = (1..=args.n)
        .map(|n| InputWord {
            source: format!("@engel:{n}"),
            word: engel(n, args.bracket.into()),
        })
        .collect();
    let mut report = Report::new("engel");
    report.items = classify_items(&inputs, &opts);
    let summary: String = report
        .items
        .iter()
        .map(|i| {
            let aut = match i.aut_invertible {
                Some(true) => "aut-invertible",
                Some(false) => "not aut-invertible",
                None => "aut search indeterminate",
            };
            let status = i
                .status
                .map_or_else(|| i.error.clone().unwrap_or_default(), |s| format!("{s:?}"));
            format!("e_{}\tlength {}\t{status}\t{aut}\n", i.index + 1, i.length)
        })
        .collect();
    emit(&report, args.out.as_deref(), &summary)
}

fn run_certify(args: &CertifyArgs) -> Result<()> {
    let inputs = read_words(&args.input)?;
    let read_endo = |p: &Path| -> Result<Endomorphism> {
        let text =
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        Endomorphism::parse_text(&text).with_context(|| format!("in {}", p.display()))
    };
    let endo = read_endo(&args.endo_file)?;
    let inverse = args.inverse_file.as_deref().map(read_endo).transpose()?;
    let mut report = Report::new("certify");
    let mut summary = String::new();
    let mut failures = 0;
    for (i, input) in inputs.iter().enumerate() {
        let word = input.word.with_rank(endo.rank().max(input.word.rank()))?;
        let cert = match &inverse {
            Some(inv) => InversionCertificate {
                word,
                endo: endo.clone(),
                kind: CertificateKind::AutomorphismWitness,
                aut_proof: Some(inv.clone()),
            },
            None => InversionCertificate::endomorphism(word, endo.clone()),
        };
        let mut item = ItemReport {
            index: i,
            input: input.source.clone(),
            word: cert.word.to_string(),
            rank: cert.word.rank(),
            length: cert.word.len(),
            status: None,
            error: None,
            reasons: Vec::new(),
            certificates: Vec::new(),
            witness: None,
            aut_invertible: None,
            in_d: None,
        };
        match cert.verify() {
            Ok(()) => {
                writeln!(
                    summary,
                    "{}\tcertificate valid ({:?})",
                    item.word, cert.kind
                )?;
                item.status = Some(crate::classify::Status::Achiral);
                item.certificates.push(CertificateReport::from(&cert));
            }
            Err(e) => {
                failures += 1;
                writeln!(summary, "{}\tcertificate invalid: {e}", item.word)?;
                item.error = Some(e.to_string());
            }
        }
        report.items.push(item);
    }
    emit(&report, args.out.as_deref(), &summary)?;
    if failures > 0 {
        bail!("{failures} certificate(s) failed");
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.report)
        .with_context(|| format!("reading {}", args.report.display()))?;
    let s = verify_report(&text)?;
    println!(
        "ok: {} certificate(s), {} orbit automorphism(s) verified",
        s.certificates, s.orbit_automorphisms
    );
    Ok(())
}

/// Executes a parsed command line.
pub fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Classify(a) => run_classify(a),
        Command::Whitehead(a) => run_whitehead(a),
        Command::Image(a) => run_image(a),
        Command::Witness(a) => run_witness(a),
        Command::Enumerate(a) => run_enumerate(a),
        Command::Engel(a) => run_engel(a),
        Command::Certify(a) => run_certify(a),
        Command::Verify(a) => run_verify(a),
    }
}
