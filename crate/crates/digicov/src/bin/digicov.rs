//! Command-line front end: run the predicate checkers on JSON map files,
//! generate fixture files, reproduce the named fixture results, and drive
//! exhaustive implication scans.
//!
//! Exit codes: 0 = predicate holds / implication held / all assertions
//! confirmed; 1 = predicate fails / counterexamples found / an assertion
//! failed; 2 = input or search-budget error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use digicov::catalog::{
    curve_of_length, cyclic_cover, interval_image, scc_catalog, wrap_map, SimpleClosedCurve,
};
use digicov::covering::{
    check_digital_covering, check_inclusion_39, check_original_pseudocovering,
    check_revised_pseudocovering, check_wl_surjection, classify, PredicateReport,
};
use digicov::error::DomainError;
use digicov::json::{load_map, write_pretty, CounterexampleJson, CurveJson, ImageJson, MapJson};
use digicov::lattice::Point;
use digicov::morphism::{
    is_continuous, is_isomorphism, is_local_isomorphism, is_wl_isomorphism, Verdict,
};
use digicov::oracle::{implication_scan, EnumerationBounds, PredicateName};

#[derive(Parser)]
#[command(
    name = "digicov",
    about = "Witness-carrying checks for covering-type maps between finite digital images",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one predicate for a map file; exits 0 iff it holds.
    Check {
        /// continuous | isomorphism | local-iso-surjection | wl-isomorphism |
        /// wl-surjection | pseudo-original | pseudo-revised | covering |
        /// inclusion-39
        predicate: String,
        /// Map JSON file
        map: PathBuf,
        /// Emit the full report as JSON on stdout
        #[arg(long)]
        json: bool,
        /// For pseudo-original: search all fiber subsets as the index set
        /// instead of fixing it to the whole fiber
        #[arg(long)]
        subset_search: bool,
    },
    /// Run every predicate on a map file and print the outcomes.
    Classify {
        map: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write fixture files (curves, wrap maps, cyclic covers, intervals).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Re-run a named fixture result end to end; exits 0 only if every
    /// assertion of that result is confirmed.
    Repro {
        /// remark-3-1 | prop-3-9 | corollary | theorem-1 | summary
        result: String,
    },
    /// Exhaustively search small maps for counterexamples to
    /// "hypothesis implies conclusion"; exits 0 if none exist in bounds.
    Falsify {
        hypothesis: String,
        conclusion: String,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// A catalog simple closed curve, e.g. --name sc8-2-4.
    Scc {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The map t -> x_{t mod l} from the interval [0, window-end].
    Wrap {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        window_end: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The index-folding map between two catalog curves.
    Cover {
        #[arg(long)]
        big: String,
        #[arg(long)]
        small: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The integer interval {start, ..., end} with 2-adjacency.
    Interval {
        #[arg(long)]
        start: i64,
        #[arg(long)]
        end: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Largest image size enumerated
    #[arg(long)]
    max_points: Option<usize>,
    /// Highest ambient dimension enumerated
    #[arg(long)]
    dim: Option<u32>,
    /// Highest adjacency parameter t enumerated
    #[arg(long)]
    t: Option<u32>,
    /// Side length of the bounding box
    #[arg(long = "box")]
    box_extent: Option<i64>,
    /// Refuse searches whose candidate count exceeds this
    #[arg(long)]
    ceiling: Option<u128>,
}

impl BoundsArgs {
    fn resolve(&self) -> Result<EnumerationBounds> {
        let mut b = EnumerationBounds::default();
        if let Ok(raw) = std::env::var("DIGICOV_CEILING") {
            b.ceiling = raw
                .parse()
                .map_err(|_| anyhow!("DIGICOV_CEILING is not an integer: {raw}"))?;
        }
        if let Some(v) = self.max_points {
            b.max_points = v;
        }
        if let Some(v) = self.dim {
            b.dim = v;
        }
        if let Some(v) = self.t {
            b.t = v;
        }
        if let Some(v) = self.box_extent {
            b.box_extent = v;
        }
        if let Some(v) = self.ceiling {
            b.ceiling = v;
        }
        Ok(b)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            predicate,
            map,
            json,
            subset_search,
        } => cmd_check(&predicate, &map, json, subset_search),
        Command::Classify { map, json } => cmd_classify(&map, json),
        Command::Gen { kind } => cmd_gen(kind),
        Command::Repro { result } => cmd_repro(&result),
        Command::Falsify {
            hypothesis,
            conclusion,
            bounds,
            json,
        } => cmd_falsify(&hypothesis, &conclusion, &bounds, json),
    }
}

/// What each predicate means, quoted in human-readable reports so the
/// output explains itself.
fn predicate_gloss(name: &str) -> &'static str {
    match name {
        "continuous" => "f(N(x,1)) is inside N(f(x),1) at every x",
        "isomorphism" => "continuous bijection with continuous inverse",
        "local-iso-surjection" => {
            "surjective, and each N(x,1) maps isomorphically onto N(f(x),1) \
             (Definition 3)"
        }
        "wl-isomorphism" => "each N(x,1) maps isomorphically onto its own image f(N(x,1))",
        "wl-surjection" => "a surjective weakly-local isomorphism",
        "pseudo-original" => {
            "Definition 4: surjection with (1) sheet union equal to the \
             neighborhood preimage, (2) pairwise disjoint sheets, (3) \
             weakly-local restrictions"
        }
        "pseudo-revised" => {
            "revised Definition 4: condition (1) weakened to the inclusion \
             (3.9), union of sheets inside the neighborhood preimage"
        }
        "covering" => {
            "Definition 5: conditions (1) and (2) with each sheet mapped \
             isomorphically onto the whole of N(b,1)"
        }
        "inclusion-39" => {
            "inclusion (3.9): the union of sheets over b sits inside \
             p^{-1}(N(b,1)), at every base point"
        }
        _ => "",
    }
}

fn verdict_report(name: &str, v: Verdict) -> PredicateReport {
    PredicateReport {
        predicate: name.to_string(),
        holds: v.holds,
        witness: v.witness,
        per_base: Vec::new(),
    }
}

fn run_predicate(
    predicate: &str,
    map: &digicov::DigitalMap,
    subset_search: bool,
) -> Result<PredicateReport> {
    let report = match predicate {
        "continuous" => verdict_report(predicate, is_continuous(map)),
        "isomorphism" => verdict_report(predicate, is_isomorphism(map)),
        "local-iso-surjection" => {
            let mut v = is_local_isomorphism(map);
            if v.holds {
                if let Some(y) = map.surjectivity_gap() {
                    v = Verdict::fail(digicov::Witness::NotSurjective { y });
                }
            }
            verdict_report(predicate, v)
        }
        "wl-isomorphism" => verdict_report(predicate, is_wl_isomorphism(map)),
        "wl-surjection" => check_wl_surjection(map),
        "pseudo-original" => check_original_pseudocovering(map, subset_search)?,
        "pseudo-revised" => check_revised_pseudocovering(map),
        "covering" => check_digital_covering(map),
        "inclusion-39" => check_inclusion_39(map),
        other => bail!(DomainError::UnknownPredicate(other.to_string())),
    };
    Ok(report)
}

fn print_report(report: &PredicateReport, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
        return Ok(());
    }
    println!("predicate: {}", report.predicate);
    let gloss = predicate_gloss(&report.predicate);
    if !gloss.is_empty() {
        println!("  meaning: {gloss}");
    }
    println!("  holds: {}", report.holds);
    if let Some(w) = &report.witness {
        println!("  witness: {}", serde_json::to_string(w)?);
    }
    for base in &report.per_base {
        let show = |o: Option<bool>| match o {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        println!(
            "  base {}: (1) {}  (2) {}  (3) {}  equality(3.8) {}",
            base.b,
            show(base.cond1),
            show(base.cond2),
            show(base.cond3),
            show(base.equality38),
        );
    }
    Ok(())
}

fn cmd_check(predicate: &str, map_path: &Path, json: bool, subset_search: bool) -> Result<u8> {
    let map =
        load_map(map_path).with_context(|| format!("reading map file {}", map_path.display()))?;
    let report = run_predicate(predicate, &map, subset_search)?;
    print_report(&report, json)?;
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_classify(map_path: &Path, json: bool) -> Result<u8> {
    let map =
        load_map(map_path).with_context(|| format!("reading map file {}", map_path.display()))?;
    let c = classify(&map);
    if json {
        println!("{}", serde_json::to_string_pretty(&c)?);
    } else {
        let rows: [(&str, bool, &Option<digicov::Witness>); 6] = [
            ("continuous", c.continuous.holds, &c.continuous.witness),
            (
                "wl-surjection",
                c.wl_surjection.holds,
                &c.wl_surjection.witness,
            ),
            (
                "local-iso-surjection",
                c.local_iso.holds,
                &c.local_iso.witness,
            ),
            (
                "pseudo-original",
                c.pseudo_original.holds,
                &c.pseudo_original.witness,
            ),
            (
                "pseudo-revised",
                c.pseudo_revised.holds,
                &c.pseudo_revised.witness,
            ),
            ("covering", c.covering.holds, &c.covering.witness),
        ];
        for (name, holds, witness) in rows {
            if holds {
                println!("{name:22} holds");
            } else {
                let w = witness
                    .as_ref()
                    .map(|w| serde_json::to_string(w).unwrap_or_default())
                    .unwrap_or_default();
                println!("{name:22} fails  {w}");
            }
        }
    }
    Ok(0)
}

fn cmd_gen(kind: GenKind) -> Result<u8> {
    match kind {
        GenKind::Scc { name, out } => {
            let curve = scc_catalog(&name)?;
            let path = out.unwrap_or_else(|| PathBuf::from(format!("{name}.curve.json")));
            write_pretty(&path, &CurveJson::from_curve(&curve))?;
            println!("wrote {}", path.display());
        }
        GenKind::Wrap {
            curve,
            window_end,
            out,
        } => {
            let scc = scc_catalog(&curve)?;
            let map = wrap_map(&scc, window_end)?;
            let path = out
                .unwrap_or_else(|| PathBuf::from(format!("wrap-{curve}-w{window_end}.map.json")));
            write_pretty(&path, &MapJson::from_map(&map))?;
            println!("wrote {}", path.display());
        }
        GenKind::Cover { big, small, out } => {
            let b = scc_catalog(&big)?;
            let s = scc_catalog(&small)?;
            let map = cyclic_cover(&b, &s)?;
            let path =
                out.unwrap_or_else(|| PathBuf::from(format!("cover-{big}-{small}.map.json")));
            write_pretty(&path, &MapJson::from_map(&map))?;
            println!("wrote {}", path.display());
        }
        GenKind::Interval { start, end, out } => {
            let image = interval_image(start, end)?;
            let path =
                out.unwrap_or_else(|| PathBuf::from(format!("interval-{start}-{end}.image.json")));
            write_pretty(&path, &ImageJson::from_image(&image))?;
            println!("wrote {}", path.display());
        }
    }
    Ok(0)
}

/// One assertion of a repro run: prints its own pass/fail line and
/// accumulates into the overall exit code.
struct Assertions {
    failed: Vec<String>,
}

impl Assertions {
    fn new() -> Self {
        Assertions { failed: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if ok {
            println!("  confirmed: {label}");
        } else {
            println!("  FAILED:    {label}");
            self.failed.push(label.to_string());
        }
    }

    fn finish(self) -> Result<u8> {
        if self.failed.is_empty() {
            println!("all assertions confirmed");
            Ok(0)
        } else {
            println!("{} assertion(s) failed:", self.failed.len());
            for f in &self.failed {
                println!("  - {f}");
            }
            Ok(1)
        }
    }
}

fn default_bounds() -> Result<EnumerationBounds> {
    BoundsArgs {
        max_points: None,
        dim: None,
        t: None,
        box_extent: None,
        ceiling: None,
    }
    .resolve()
}

fn wrap_fixture(l: usize) -> (SimpleClosedCurve, digicov::DigitalMap) {
    let curve = curve_of_length(l).expect("catalog covers lengths 4..=8");
    let map = wrap_map(&curve, 3 * l as i64).expect("window long enough");
    (curve, map)
}

fn repro_remark_3_1(a: &mut Assertions) -> Result<()> {
    println!(
        "The wrap map p(t) = x_(t mod l) from an integer interval onto a \
         simple closed curve is surjective and weakly-local, but it is not \
         a pseudocovering in the sense of Definition 4: at the base point \
         x_(l-1), the preimage of N(x_(l-1),1) contains the interval point 0, \
         which lies in no sheet over x_(l-1)."
    );
    for l in 4..=8 {
        let (curve, map) = wrap_fixture(l);
        let original = check_original_pseudocovering(&map, false)?;
        let want_b = curve.point(l - 1).clone();
        let want = digicov::Witness::MissingPreimagePoint {
            b: want_b,
            e: Point::new(vec![0]),
        };
        a.check(
            &format!(
                "l={l}: Definition 4 fails with witness base x_{}, missing point 0",
                l - 1
            ),
            !original.holds && original.witness.as_ref() == Some(&want),
        );
        let revised = check_revised_pseudocovering(&map);
        a.check(
            &format!("l={l}: the same map satisfies the revised predicate"),
            revised.holds,
        );
        let wl = check_wl_surjection(&map);
        a.check(&format!("l={l}: and is a WL-surjection"), wl.holds);
    }
    Ok(())
}

fn repro_prop_3_9(a: &mut Assertions) -> Result<()> {
    println!(
        "For a WL-surjection, the union of the sheets over b need not equal \
         p^-1(N(b,1)) (the corrected statement replaces equality (3.8) with \
         inclusion (3.9)). The inclusion holds for every enumerated \
         WL-surjection; strictness is witnessed by the wrap map."
    );
    let bounds = default_bounds()?;
    let mut checked = 0u64;
    let mut inclusion_ok = true;
    digicov::oracle::scan_surjections(&bounds, true, |m| {
        if check_wl_surjection(m).holds {
            checked += 1;
            if !check_inclusion_39(m).holds {
                inclusion_ok = false;
            }
        }
    })?;
    a.check(
        &format!("inclusion (3.9) holds on all {checked} enumerated WL-surjections"),
        inclusion_ok && checked > 0,
    );
    let (curve, map) = wrap_fixture(4);
    let incl = check_inclusion_39(&map);
    let strict_at_x3 = incl
        .per_base
        .iter()
        .any(|b| &b.b == curve.point(3) && b.equality38 == Some(false));
    a.check(
        "wrap map (l=4, window [0,12]): inclusion holds but equality (3.8) fails at x_3",
        incl.holds && strict_at_x3,
    );
    Ok(())
}

fn scan_expect(
    a: &mut Assertions,
    bounds: &EnumerationBounds,
    hyp: PredicateName,
    concl: PredicateName,
    expect_counterexample: bool,
) -> Result<()> {
    let cex = implication_scan(hyp, concl, bounds)?;
    let label = if expect_counterexample {
        format!(
            "{hyp} does NOT imply {concl} ({} counterexamples)",
            cex.len()
        )
    } else {
        format!("{hyp} implies {concl} (no counterexample in bounds)")
    };
    a.check(&label, cex.is_empty() != expect_counterexample);
    if expect_counterexample {
        if let Some(first) = cex.first() {
            println!(
                "    first counterexample: {}",
                serde_json::to_string(&CounterexampleJson::from_counterexample(first))?
            );
        }
    }
    Ok(())
}

fn repro_corollary(a: &mut Assertions) -> Result<()> {
    println!(
        "A pseudocovering of Definition 4 is a WL-surjection, but the \
         converse fails; with the revised predicate the converse direction \
         is restored."
    );
    let bounds = default_bounds()?;
    scan_expect(
        a,
        &bounds,
        PredicateName::PseudoOriginal,
        PredicateName::WlSurjection,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::WlSurjection,
        PredicateName::PseudoOriginal,
        true,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::WlSurjection,
        PredicateName::PseudoRevised,
        false,
    )?;
    Ok(())
}

fn repro_theorem_1(a: &mut Assertions) -> Result<()> {
    println!(
        "On connected images, a digital covering (Definition 5) is the same \
         thing as a surjective local isomorphism; all enumerated images are \
         connected, so the scan checks both directions."
    );
    let bounds = default_bounds()?;
    scan_expect(
        a,
        &bounds,
        PredicateName::Covering,
        PredicateName::LocalIsoSurjection,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::LocalIsoSurjection,
        PredicateName::Covering,
        false,
    )?;
    Ok(())
}

fn repro_summary(a: &mut Assertions) -> Result<()> {
    println!(
        "Corrected implication lattice: pseudocovering (Definition 4) => \
         revised pseudocovering <=> WL-surjection, covering (Definition 5) \
         => revised pseudocovering, and neither converse along the top row \
         holds."
    );
    let bounds = default_bounds()?;
    scan_expect(
        a,
        &bounds,
        PredicateName::PseudoOriginal,
        PredicateName::WlSurjection,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::WlSurjection,
        PredicateName::PseudoRevised,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::PseudoRevised,
        PredicateName::WlSurjection,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::Covering,
        PredicateName::PseudoRevised,
        false,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::WlSurjection,
        PredicateName::PseudoOriginal,
        true,
    )?;
    scan_expect(
        a,
        &bounds,
        PredicateName::PseudoRevised,
        PredicateName::Covering,
        true,
    )?;
    Ok(())
}

fn cmd_repro(result: &str) -> Result<u8> {
    let mut a = Assertions::new();
    println!("repro {result}");
    match result {
        "remark-3-1" => repro_remark_3_1(&mut a)?,
        "prop-3-9" => repro_prop_3_9(&mut a)?,
        "corollary" => repro_corollary(&mut a)?,
        "theorem-1" => repro_theorem_1(&mut a)?,
        "summary" => repro_summary(&mut a)?,
        other => bail!(
            "unknown repro target {other:?}; expected one of remark-3-1, \
             prop-3-9, corollary, theorem-1, summary"
        ),
    }
    a.finish()
}

fn cmd_falsify(hypothesis: &str, conclusion: &str, bounds: &BoundsArgs, json: bool) -> Result<u8> {
    let hyp: PredicateName = hypothesis.parse().map_err(|e: DomainError| anyhow!(e))?;
    let concl: PredicateName = conclusion.parse().map_err(|e: DomainError| anyhow!(e))?;
    let bounds = bounds.resolve()?;
    let cex = implication_scan(hyp, concl, &bounds)?;
    if json {
        let out: Vec<CounterexampleJson> = cex
            .iter()
            .map(CounterexampleJson::from_counterexample)
            .collect();
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else if cex.is_empty() {
        println!(
            "no counterexample: every enumerated map satisfying {hyp} also \
             satisfies {concl} (bounds: up to {} points, dim <= {}, t <= {}, \
             box {})",
            bounds.max_points, bounds.dim, bounds.t, bounds.box_extent
        );
    } else {
        println!(
            "{} counterexample(s): maps satisfying {hyp} but not {concl}",
            cex.len()
        );
        for c in cex.iter().take(5) {
            println!(
                "  {}",
                serde_json::to_string(&CounterexampleJson::from_counterexample(c))?
            );
        }
        if cex.len() > 5 {
            println!("  ... and {} more", cex.len() - 5);
        }
    }
    Ok(if cex.is_empty() { 0 } else { 1 })
}
