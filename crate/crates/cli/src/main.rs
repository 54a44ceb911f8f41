//! `ciskit`: construct, check and classify CIS codes from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ciskit::cis::{
    extract_permutation, find_cis_partition, gci_order_dual, gci_order_dual_linear, gci_order_walsh,
    is_cis_systematic, CisDecision, GciReport, PermutationTable,
};
use ciskit::classification::{classify_buildup_chain, classify_exhaustive, mass_check, BuildUpConfig};
use ciskit::constructions::{
    brute_b, build_up, cyclic_code, double_circulant, extend_parity_at, paley_cis, shorten, vg_bound_m,
    MAX_GL_ENUMERATION,
};
use ciskit::io::{parse_matrix_file, write_binary_matrix, write_sbox, write_z4_matrix, MatrixFile};
use ciskit::z4::{octacode, z4_permutation, z4_qr_code, Z4FreeCode};
use ciskit::{BitVector, Count, ExactDistribution, Gf2Poly, LinearCode};

#[derive(Parser)]
#[command(name = "ciskit", version, about = "Complementary information set codes and GCI permutations")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator matrix for one of the built-in constructions.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Test a property of the code in FILE.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: Property,
    },
    /// GCI order of the permutation carried by a systematic CIS code.
    Gci {
        file: PathBuf,
        /// Write the permutation as an S-box table.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Classify all [2n, n] CIS codes of the given length.
    Classify {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = Method::Buildup)]
        method: Method,
        /// Write one report line per class.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Limit the re-systematized variants per representative when building up.
        #[arg(long)]
        max_variants: Option<usize>,
    },
    /// Check that the classes of length 2n account for all of GL(n, 2).
    Masscheck {
        #[arg(long)]
        n: usize,
    },
    /// The counting bound M(n, d), with the brute-force count B(n, d) for small n.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// (I | A) with A circulant on the coefficients of f.
    DoubleCirculant {
        #[arg(long)]
        n: usize,
        /// Coefficients of f, lowest degree first.
        #[arg(long)]
        f: String,
    },
    /// (I | Q + I) or (I | Q) from the quadratic residues mod q.
    Paley {
        #[arg(long)]
        q: u64,
    },
    /// Cyclic code of length N with generator g, shortened at one coordinate.
    CyclicShorten {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        g: String,
        /// Coordinate to shorten at (default 0).
        #[arg(long, default_value_t = 0)]
        at: usize,
    },
    /// Cyclic code of length N with generator g, extended by an overall parity bit.
    CyclicExtend {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        g: String,
        /// Position of the parity coordinate (default: appended at the end).
        #[arg(long)]
        at: Option<usize>,
    },
    /// Extend a systematic CIS code by two coordinates.
    Buildup {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Extended quadratic residue code over Z4.
    Z4Qr {
        #[arg(long)]
        p: u64,
    },
    /// The octacode over Z4.
    Octacode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Cis,
    CisSystematic,
    SelfDual,
    Fsd,
    Distance,
    DualDistance,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exhaustive,
    Buildup,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn read_file(path: &Path) -> Result<MatrixFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matrix_file(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_binary(path: &Path) -> Result<LinearCode> {
    match read_file(path)? {
        MatrixFile::Binary(m) => Ok(LinearCode::new(m)?),
        MatrixFile::Z4(_) => bail!("{} holds a Z4 matrix; a binary code is required", path.display()),
    }
}

fn construct(kind: Construction) -> Result<String> {
    Ok(match kind {
        Construction::DoubleCirculant { n, f } => {
            let dc = double_circulant(&Gf2Poly::parse(&f)?, n)?;
            write_binary_matrix(dc.code.generator())
        }
        Construction::Paley { q } => write_binary_matrix(paley_cis(q)?.generator()),
        Construction::CyclicShorten { big_n, g, at } => {
            let c = cyclic_code(big_n, &Gf2Poly::parse(&g)?)?;
            write_binary_matrix(shorten(&c, at)?.generator())
        }
        Construction::CyclicExtend { big_n, g, at } => {
            let c = cyclic_code(big_n, &Gf2Poly::parse(&g)?)?;
            write_binary_matrix(extend_parity_at(&c, at.unwrap_or(big_n))?.generator())
        }
        Construction::Buildup { base, x, y } => {
            let out = build_up(&read_binary(&base)?, &BitVector::parse(&x)?, &BitVector::parse(&y)?)?;
            write_binary_matrix(out.code.generator())
        }
        Construction::Z4Qr { p } => write_z4_matrix(&z4_qr_code(p)?.generator()),
        Construction::Octacode => write_z4_matrix(&octacode().generator()),
    })
}

fn check_binary(code: &LinearCode, what: Property) -> Result<String> {
    Ok(match what {
        Property::Cis if !code.is_rate_half() => "cis=no reason=not-rate-half".into(),
        Property::Cis => match find_cis_partition(code)? {
            CisDecision::Cis(cert) => format!("cis=yes left={} right={}", join(&cert.left), join(&cert.right)),
            CisDecision::NotCis(reason) => format!("cis=no reason={}", reason.tag()),
        },
        Property::CisSystematic if !code.is_rate_half() => "cis=no reason=not-rate-half".into(),
        Property::CisSystematic => {
            let n = code.dimension();
            if is_cis_systematic(code)? {
                let left: Vec<usize> = (0..n).collect();
                let right: Vec<usize> = (n..2 * n).collect();
                format!("cis=yes left={} right={}", join(&left), join(&right))
            } else {
                "cis=no reason=not-systematic".into()
            }
        }
        Property::SelfDual => format!("self-dual={}", yes_no(code.is_self_dual())),
        Property::Fsd => format!("fsd={}", yes_no(code.is_formally_self_dual()?)),
        Property::Distance => format!("distance={}", code.min_distance()?),
        Property::DualDistance => format!("dual-distance={}", code.dual_distance()?),
    })
}

fn check_z4(code: &Z4FreeCode, what: Property) -> Result<String> {
    let rate_half = code.length() == 2 * code.dimension();
    Ok(match what {
        Property::Cis | Property::CisSystematic if !rate_half => "cis=no reason=not-rate-half".into(),
        Property::Cis | Property::CisSystematic => {
            let k = code.dimension();
            if code.is_free_cis() {
                let left: Vec<usize> = (0..k).collect();
                let right: Vec<usize> = (k..2 * k).collect();
                format!("cis=yes left={} right={}", join(&left), join(&right))
            } else {
                "cis=no reason=not-systematic".into()
            }
        }
        Property::SelfDual => format!("self-dual={}", yes_no(code.is_self_dual())),
        Property::Fsd => {
            let b: ExactDistribution = code.binary_image()?.distance_distribution()?;
            format!("fsd={}", yes_no(b.macwilliams() == b))
        }
        Property::Distance => format!("distance={}", code.min_lee_weight()?),
        Property::DualDistance => {
            let d = code.binary_image()?.dual_distance()?;
            format!("dual-distance={}", d.map_or("none".into(), |d| d.to_string()))
        }
    })
}

fn gci(file: &Path, export: Option<&Path>) -> Result<(String, bool)> {
    let (table, report, crosscheck): (PermutationTable, GciReport, usize) = match read_file(file)? {
        MatrixFile::Binary(m) => {
            let code = LinearCode::new(m)?;
            let f = extract_permutation(&code)?;
            let r = gci_order_walsh(&f);
            (f, r, gci_order_dual_linear(&code)?)
        }
        MatrixFile::Z4(g) => {
            let code = Z4FreeCode::from_generator(&g)?;
            let f = z4_permutation(&code)?;
            let r = gci_order_walsh(&f);
            let d = gci_order_dual(&f)?;
            (f, r, d)
        }
    };
    if let Some(path) = export {
        fs::write(path, write_sbox(&table)).with_context(|| format!("writing {}", path.display()))?;
    }
    let agree = report.order == crosscheck;
    Ok((
        format!(
            "gci-order={} method=walsh crosscheck=dual-distance agreement={}",
            report.order,
            yes_no(agree)
        ),
        agree,
    ))
}

fn classify(length: usize, method: Method, out: Option<&Path>, max_variants: Option<usize>) -> Result<String> {
    if length == 0 || length % 2 == 1 {
        bail!("length must be a positive even number, got {length}");
    }
    let n = length / 2;
    let report = match method {
        Method::Exhaustive => classify_exhaustive(n)?,
        Method::Buildup => classify_buildup_chain(n, &BuildUpConfig { max_variants })?
            .pop()
            .expect("chain is nonempty"),
    };
    if let Some(path) = out {
        let mut text = report.report_lines().join("\n");
        text.push('\n');
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.summary_line())
}

fn bounds(n: usize, d: usize) -> Result<String> {
    let m: Count = vg_bound_m(n, d)?;
    if n <= MAX_GL_ENUMERATION {
        let b: Count = brute_b(n, d)?;
        Ok(format!("M={m} B={b}"))
    } else {
        Ok(format!("M={m}"))
    }
}

/// Output text and whether every internal cross-check agreed.
fn run(cli: Cli) -> Result<(String, bool)> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let line = match cli.command {
        Command::Construct { kind } => return Ok((construct(kind)?, true)),
        Command::Check { file, what } => match read_file(&file)? {
            MatrixFile::Binary(m) => check_binary(&LinearCode::new(m)?, what)?,
            MatrixFile::Z4(g) => check_z4(&Z4FreeCode::from_generator(&g)?, what)?,
        },
        Command::Gci { file, export } => return gci(&file, export.as_deref()).map(|(s, ok)| (s + "\n", ok)),
        Command::Classify { length, method, out, max_variants } => {
            classify(length, method, out.as_deref(), max_variants)?
        }
        Command::Masscheck { n } => {
            if n == 0 || n > MAX_GL_ENUMERATION {
                bail!("masscheck needs 1 <= n <= {MAX_GL_ENUMERATION}, got {n}");
            }
            let m = mass_check(&classify_exhaustive(n)?)?;
            format!("gn={} sum={} complete={}", m.g_n, m.sum, yes_no(m.complete))
        }
        Command::Bounds { n, d } => bounds(n, d)?,
    };
    Ok((line + "\n", true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
