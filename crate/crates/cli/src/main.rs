//! `permpoly` — exact permanental polynomials of bipartite graphs.
//!
//! Graphs enter and leave as JSON (`{"n":..,"edges":[[u,v],..]}`,
//! optionally with an `embedding` field); polynomials are printed as
//! integer arrays indexed by degree. Exit codes: 0 success, 1 domain
//! error (reported as JSON on stderr), 2 usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use permpoly_core as core;
use permpoly_core::{Error, Graph, IntPolynomial, Orientation, RotationEmbedding};

#[derive(Parser)]
#[command(name = "permpoly", version, about = "Permanental polynomials of bipartite graphs via odd orientations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a generated family member as graph JSON.
    ///
    /// Families: cycle K | path K | theta L1 L2 L3 | g1 S | g2 R |
    /// hex_chain H [L|S|R codes or B] | hex_branched | cube |
    /// complete_bipartite A B
    Generate {
        family: String,
        params: Vec<String>,
    },
    /// Bipartition, planarity (with embedding) and the per-block
    /// resonance report.
    Analyze { input: Option<String> },
    /// Orientation with every cycle oddly oriented, as [[tail,head],..].
    Orient { input: Option<String> },
    /// Permanental polynomial (determinant route by default).
    Permpoly {
        input: Option<String>,
        /// Brute-force subpermanent route.
        #[arg(long)]
        oracle: bool,
        /// det(x^2 I + B^T B) route over the skew biadjacency block.
        #[arg(long)]
        biadjacency: bool,
        /// Human-readable polynomial instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Characteristic polynomial det(xI - A(G)) of the plain adjacency
    /// matrix.
    Charpoly {
        input: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Replay the orientation invariants on a (graph, orientation) pair.
    Verify {
        input: Option<String>,
        /// Orientation JSON ([[tail,head],..]), inline or a file path.
        #[arg(long)]
        orientation: String,
    },
    /// Brute-force oracles: cycle count, matchings, resonance, even theta.
    Oracle { input: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Domain(e)) => {
            let msg = ErrorJson {
                error: e.to_string(),
                kind: kind_of(&e),
            };
            eprintln!("{}", serde_json::to_string(&msg).unwrap());
            ExitCode::from(1)
        }
        Err(CmdError::Usage(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
    }
}

enum CmdError {
    Domain(Error),
    Usage(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Domain(e)
    }
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
    kind: &'static str,
}

fn kind_of(e: &Error) -> &'static str {
    match e {
        Error::SelfLoop(_) => "SelfLoop",
        Error::DuplicateEdge(_, _) => "DuplicateEdge",
        Error::VertexOutOfRange(_, _) => "VertexOutOfRange",
        Error::NotBipartite(_) => "NotBipartite",
        Error::Disconnected => "Disconnected",
        Error::TooLargeForOracle { .. } => "TooLargeForOracle",
        Error::NotPlanar(_) => "NotPlanar",
        Error::Not2Connected => "Not2Connected",
        Error::InvalidEmbedding => "InvalidEmbedding",
        Error::InvalidOrientation => "InvalidOrientation",
        Error::ContainsEvenK23 => "ContainsEvenK23",
        Error::OddLengthCycle => "OddLengthCycle",
        Error::TooLarge { .. } => "TooLarge",
        Error::UnbalancedParts => "UnbalancedParts",
        Error::InvalidLengths => "InvalidLengths",
        Error::InvalidCode => "InvalidCode",
        Error::OverlapDetected => "OverlapDetected",
        Error::HasCycleLengthDivisibleBy4 => "HasCycleLengthDivisibleBy4",
        Error::NotResonant(_) => "NotResonant",
        Error::InvalidJson(_) => "InvalidJson",
    }
}

/// Cycle-enumeration bound, overridable through PERMPOLY_ORACLE_BOUND.
fn oracle_bound(default: usize) -> usize {
    std::env::var("PERMPOLY_ORACLE_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn read_input(arg: Option<String>) -> Result<String, CmdError> {
    let arg = arg.unwrap_or_else(|| "-".to_string());
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CmdError::Usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else if arg.trim_start().starts_with(['{', '[']) {
        Ok(arg)
    } else {
        std::fs::read_to_string(&arg)
            .map_err(|e| CmdError::Usage(format!("cannot read {arg}: {e}")))
    }
}

fn read_graph(arg: Option<String>) -> Result<(Graph, Option<RotationEmbedding>), CmdError> {
    let text = read_input(arg)?;
    Ok(core::graph_from_json(&text)?)
}

fn run(cmd: Cmd) -> Result<(), CmdError> {
    match cmd {
        Cmd::Generate { family, params } => generate(&family, &params),
        Cmd::Analyze { input } => analyze(read_graph(input)?.0),
        Cmd::Orient { input } => {
            let (g, _) = read_graph(input)?;
            let o = core::orient_graph(&g)?;
            println!("{}", core::orientation_to_json(&o));
            Ok(())
        }
        Cmd::Permpoly {
            input,
            oracle,
            biadjacency,
            pretty,
        } => {
            if oracle && biadjacency {
                return Err(CmdError::Usage(
                    "--oracle and --biadjacency are mutually exclusive".into(),
                ));
            }
            let (g, _) = read_graph(input)?;
            let poly = if oracle {
                core::perm_poly_oracle(&g)?
            } else if biadjacency {
                let coloring = core::bipartition(&g)?;
                let o = core::orient_graph(&g)?;
                core::perm_poly_biadjacency(&g, &coloring, &o)?
            } else {
                core::perm_poly_fast(&g)?
            };
            print_poly(&poly, pretty);
            Ok(())
        }
        Cmd::Charpoly { input, pretty } => {
            let (g, _) = read_graph(input)?;
            let poly = core::charpoly(&core::IntMatrix::adjacency(&g));
            print_poly(&poly, pretty);
            Ok(())
        }
        Cmd::Verify { input, orientation } => {
            let (g, _) = read_graph(input)?;
            let o_text = read_input(Some(orientation))?;
            let o = core::orientation_from_json(&g, &o_text)?;
            verify(&g, &o)
        }
        Cmd::Oracle { input } => oracle_view(read_graph(input)?.0),
    }
}

fn print_poly(p: &IntPolynomial, pretty: bool) {
    if pretty {
        println!("{p}");
    } else {
        println!("{}", p.to_json());
    }
}

fn parse_params(params: &[String]) -> Result<Vec<usize>, CmdError> {
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CmdError::Usage(format!("expected an integer, got {p}")))
        })
        .collect()
}

fn generate(family: &str, params: &[String]) -> Result<(), CmdError> {
    let wrong_arity =
        |want: &str| CmdError::Usage(format!("family {family} expects parameters: {want}"));
    let spec = match family {
        "cycle" => {
            let &[k] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("K (K >= 3)"));
            };
            core::FamilySpec::Cycle(k)
        }
        "path" => {
            let &[k] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("K"));
            };
            core::FamilySpec::Path(k)
        }
        "theta" => {
            let &[l1, l2, l3] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("L1 L2 L3"));
            };
            core::FamilySpec::Theta(l1, l2, l3)
        }
        "g1" => {
            let &[s] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("S (S >= 2)"));
            };
            core::FamilySpec::G1(s)
        }
        "g2" => {
            let &[r] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("R (R >= 1)"));
            };
            core::FamilySpec::G2(r)
        }
        "hex_chain" => {
            let Some((h_str, codes)) = params.split_first() else {
                return Err(wrong_arity("H [codes]"));
            };
            let h: usize = h_str
                .parse()
                .map_err(|_| CmdError::Usage(format!("expected an integer, got {h_str}")))?;
            if codes.len() == 1 && codes[0].eq_ignore_ascii_case("B") {
                if h != 4 {
                    return Err(CmdError::Usage("the branched code B needs H = 4".into()));
                }
                core::FamilySpec::HexBranched
            } else {
                let turns: Result<Vec<core::Turn>, CmdError> = codes
                    .iter()
                    .map(|c| match c.to_ascii_uppercase().as_str() {
                        "L" => Ok(core::Turn::Left),
                        "S" => Ok(core::Turn::Straight),
                        "R" => Ok(core::Turn::Right),
                        other => Err(CmdError::Usage(format!("unknown turn code {other}"))),
                    })
                    .collect();
                core::FamilySpec::HexChain(h, turns?)
            }
        }
        "hex_branched" => {
            if !params.is_empty() {
                return Err(wrong_arity("(none)"));
            }
            core::FamilySpec::HexBranched
        }
        "cube" => {
            if !params.is_empty() {
                return Err(wrong_arity("(none)"));
            }
            core::FamilySpec::Cube
        }
        "complete_bipartite" => {
            let &[a, b] = parse_params(params)?.as_slice() else {
                return Err(wrong_arity("A B"));
            };
            core::FamilySpec::CompleteBipartite(a, b)
        }
        other => {
            return Err(CmdError::Usage(format!(
                "unknown family {other}; see permpoly generate --help"
            )))
        }
    };
    println!("{}", core::graph_to_json(&spec.build()?, None));
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeOut {
    bipartite: BipartiteOut,
    planar: PlanarOut,
    resonance: Option<core::ResonanceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    resonance_error: Option<String>,
}

#[derive(Serialize)]
struct BipartiteOut {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<(Vec<usize>, Vec<usize>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_cycle: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct PlanarOut {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding: Option<Vec<Vec<usize>>>,
}

fn analyze(g: Graph) -> Result<(), CmdError> {
    let bipartite = match core::bipartition(&g) {
        Ok(c) => BipartiteOut {
            ok: true,
            parts: Some((c.part_u(), c.part_v())),
            odd_cycle: None,
        },
        Err(Error::NotBipartite(cycle)) => BipartiteOut {
            ok: false,
            parts: None,
            odd_cycle: Some(cycle),
        },
        Err(e) => return Err(e.into()),
    };
    let planar = match core::embed_planar(&g) {
        Ok(emb) => PlanarOut {
            ok: true,
            faces: Some(emb.face_count()),
            embedding: Some(emb.rotation().to_vec()),
        },
        Err(Error::NotPlanar(_)) => PlanarOut {
            ok: false,
            faces: None,
            embedding: None,
        },
        Err(e) => return Err(e.into()),
    };
    let (resonance, resonance_error) = match core::contains_no_even_k23(&g) {
        Ok(rep) => (Some(rep), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let out = AnalyzeOut {
        bipartite,
        planar,
        resonance,
        resonance_error,
    };
    println!("{}", serde_json::to_string(&out).unwrap());
    Ok(())
}

#[derive(Serialize)]
struct VerifyOut {
    all_cycles_odd: Option<bool>,
    pfaffian: Option<bool>,
    det_skew: String,
    perfect_matchings: String,
    det_equals_matchings_squared: bool,
    charpoly_equals_perm_poly_oracle: Option<bool>,
}

fn verify(g: &Graph, o: &Orientation) -> Result<(), CmdError> {
    let bound = oracle_bound(core::DEFAULT_CYCLE_BOUND);
    let all_odd = match core::verify_all_cycles_odd_with_bound(g, o, bound) {
        Ok(b) => Some(b),
        Err(Error::TooLargeForOracle { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let pfaffian = match core::verify_pfaffian_with_bound(g, o, bound) {
        Ok(b) => Some(b),
        Err(Error::TooLargeForOracle { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let det = core::IntMatrix::skew_adjacency(g, o).det_bareiss();
    let matchings = core::count_perfect_matchings(g);
    let m_sq = num_bigint::BigInt::from(matchings) * num_bigint::BigInt::from(matchings);
    // The subpermanent oracle is quick up to 14 vertices; skip beyond that.
    let charpoly_match = if g.n() <= 14 {
        let cp = core::charpoly(&core::IntMatrix::skew_adjacency(g, o));
        Some(cp == core::perm_poly_oracle(g)?)
    } else {
        None
    };
    let out = VerifyOut {
        all_cycles_odd: all_odd,
        pfaffian,
        det_equals_matchings_squared: det == m_sq,
        det_skew: det.to_string(),
        perfect_matchings: matchings.to_string(),
        charpoly_equals_perm_poly_oracle: charpoly_match,
    };
    println!("{}", serde_json::to_string(&out).unwrap());
    Ok(())
}

#[derive(Serialize)]
struct OracleOut {
    cycles: Option<usize>,
    perfect_matchings: String,
    one_cycle_resonant: Option<bool>,
    even_theta: Option<core::ThetaWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    even_theta_skipped: Option<String>,
}

fn oracle_view(g: Graph) -> Result<(), CmdError> {
    let cycle_bound = oracle_bound(core::DEFAULT_CYCLE_BOUND);
    let theta_bound = oracle_bound(core::DEFAULT_EVEN_THETA_BOUND);
    let cycles = match core::enumerate_cycles_with_bound(&g, cycle_bound) {
        Ok(cs) => Some(cs.len()),
        Err(Error::TooLargeForOracle { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let one_cr = if g.is_2connected() && core::bipartition(&g).is_ok() {
        match core::oracle_1cr_with_bound(&g, cycle_bound) {
            Ok(b) => Some(b),
            Err(Error::TooLargeForOracle { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let (even_theta, skipped) = match core::oracle_even_theta_with_bound(&g, theta_bound) {
        Ok(w) => (w, None),
        Err(Error::TooLargeForOracle { n, bound }) => {
            (None, Some(format!("n = {n} exceeds bound {bound}")))
        }
        Err(e) => return Err(e.into()),
    };
    let out = OracleOut {
        cycles,
        perfect_matchings: core::count_perfect_matchings(&g).to_string(),
        one_cycle_resonant: one_cr,
        even_theta,
        even_theta_skipped: skipped,
    };
    println!("{}", serde_json::to_string(&out).unwrap());
    Ok(())
}
