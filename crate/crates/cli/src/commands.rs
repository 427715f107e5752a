use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use alcove_core::affine::{
    alcove_of, in_jantzen_region, is_regular, is_restricted, parse_word, word_to_string, AffineWeylGroup,
};
use alcove_core::charring::{
    brauer_decompose, frobenius_twist, lusztig_delta_vector, twist_identity_hypotheses, verify_twist_identity,
    weyl_character, TwistReport,
};
use alcove_core::levi::{donkin_check, ideal_generated, levi_weyl_character, truncate_character};
use alcove_core::typea::{self, Partition};
use alcove_core::{
    AffineElement, CartanType, Error, FormalCharacter, Generator, KlTable, LeviDatum, RootSystem, Weight,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use crate::responses::*;
use crate::{Command, PartitionTool};

/// Why a command produced no result.
#[derive(Debug)]
pub enum Failure {
    /// Bad invocation: missing or conflicting flags. Exit code 2.
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Domain(Error::Parse(_)) => 2,
            Failure::Domain(_) => 1,
        }
    }

    pub fn response(&self) -> ErrorResponse {
        match self {
            Failure::Usage(m) => ErrorResponse { error: m.clone(), kind: "usage".into() },
            Failure::Domain(e) => ErrorResponse { error: e.to_string(), kind: e.kind().into() },
        }
    }
}

type Out = Result<Value, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    match v {
        Some(s) => Ok(s),
        None => usage(format!("missing --{flag}")),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Out {
    Ok(serde_json::to_value(v).expect("responses serialize"))
}

/// Root system, `W_p` and its KL table, each built on first use and shared
/// by every line of a batch.
pub struct Context {
    cartan: Option<String>,
    p: Option<i64>,
    rs: OnceLock<Arc<RootSystem>>,
    group: OnceLock<Arc<AffineWeylGroup>>,
    table: OnceLock<KlTable>,
}

impl Context {
    pub fn new(cartan: Option<String>, p: Option<i64>) -> Self {
        Context { cartan, p, rs: OnceLock::new(), group: OnceLock::new(), table: OnceLock::new() }
    }

    fn rs(&self) -> Result<&Arc<RootSystem>, Failure> {
        if let Some(rs) = self.rs.get() {
            return Ok(rs);
        }
        let Some(t) = &self.cartan else {
            return usage("this command needs --type");
        };
        let t = CartanType::from_str(t)?;
        Ok(self.rs.get_or_init(|| Arc::new(RootSystem::new(t))))
    }

    fn p(&self) -> Result<i64, Failure> {
        match self.p {
            None => usage("this command needs --p"),
            Some(p) if p < 2 => Err(Error::InvalidPrime(p).into()),
            Some(p) => Ok(p),
        }
    }

    fn group(&self) -> Result<&Arc<AffineWeylGroup>, Failure> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = AffineWeylGroup::new(Arc::clone(self.rs()?), self.p()?)?;
        Ok(self.group.get_or_init(|| Arc::new(g)))
    }

    fn table(&self) -> Result<&KlTable, Failure> {
        let g = self.group()?;
        Ok(self.table.get_or_init(|| KlTable::new(Arc::clone(g))))
    }

    fn weight(&self, s: &str) -> Result<Weight, Failure> {
        let w: Weight = s.parse()?;
        self.rs()?.check_rank(&w)?;
        Ok(w)
    }

    /// A word in the generators, or a regular weight standing for the
    /// element that carries the base alcove onto its alcove.
    fn element(&self, s: &str) -> Result<AffineElement, Failure> {
        let g = self.group()?;
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "id" || t.contains('s') {
            Ok(g.from_word(&parse_word(t)?)?)
        } else {
            Ok(g.element_for_weight(&self.weight(t)?)?.0)
        }
    }

    fn word(&self, x: &AffineElement) -> Result<String, Failure> {
        Ok(word_to_string(&self.group()?.reduced_word(x)))
    }
}

fn levi_datum(ctx: &Context, kept_list: &str) -> Result<LeviDatum, Failure> {
    let kept = parse_indices(kept_list)?;
    let zero_based: Vec<usize> = kept.iter().map(|&i| i - 1).collect();
    Ok(LeviDatum::new(Arc::clone(ctx.rs()?), &zero_based)?)
}

/// `"1,3"` to `[1, 3]`; indices are 1-based.
fn parse_indices(kept_list: &str) -> Result<Vec<usize>, Failure> {
    kept_list
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(Error::Parse(format!("bad simple root index {t:?} (1-based)")).into()),
        })
        .collect()
}

/// `"a,b=m"`, or a bare weight for multiplicity 1.
fn parse_term(ctx: &Context, s: &str) -> Result<(Weight, BigInt), Failure> {
    let (w, m) = match s.split_once('=') {
        Some((w, m)) => {
            let m = m.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad multiplicity in {s:?}")))?;
            (w, m)
        }
        None => (s, BigInt::from(1)),
    };
    Ok((ctx.weight(w)?, m))
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse()?)
}

/// Dominant weights with every coordinate at most `max`.
fn dominant_box(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    if max < 0 {
        return out;
    }
    let mut cur = vec![0i64; rank];
    loop {
        out.push(Weight::new(cur.clone()));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= max {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

pub fn run(ctx: &Context, cmd: &Command) -> Out {
    match cmd {
        Command::Rootsys => rootsys(ctx),
        Command::Alcove { weight } => alcove(ctx, required(weight, "weight")?),
        Command::Length { word, weight } => length(ctx, word.as_deref(), weight.as_deref()),
        Command::Bruhat { y, x } => {
            let (ey, ex) = (ctx.element(y)?, ctx.element(x)?);
            let g = ctx.group()?;
            to_value(&BruhatResponse {
                y: ctx.word(&ey)?,
                x: ctx.word(&ex)?,
                length_y: g.length(&ey),
                length_x: g.length(&ex),
                leq: g.bruhat_leq(&ey, &ex),
            })
        }
        Command::Kl { y, x } => kl(ctx, y, x),
        Command::Char { weight } => {
            let lam = ctx.weight(required(weight, "weight")?)?;
            let chi = weyl_character(ctx.rs()?, &lam)?;
            to_value(&CharResponse { weight: lam, dimension: chi.dimension(), character: chi })
        }
        Command::Decompose { terms } => {
            let mut chi = FormalCharacter::zero();
            for t in terms {
                let (w, m) = parse_term(ctx, t)?;
                chi.add_term(w, m);
            }
            let dv = brauer_decompose(ctx.rs()?, &chi)?;
            to_value(&DecomposeResponse { character: chi, rendered: dv.to_string(), delta_vector: dv })
        }
        Command::Twist { weight } => {
            let lam = ctx.weight(required(weight, "weight")?)?;
            let p = ctx.p()?;
            let rs = ctx.rs()?;
            let twisted = frobenius_twist(&weyl_character(rs, &lam)?, p);
            let dv = brauer_decompose(rs, &twisted)?;
            to_value(&TwistResponse { weight: lam, p, character: twisted, delta_vector: dv })
        }
        Command::Lcf { weight } => lcf(ctx, required(weight, "weight")?),
        Command::VerifyTwist { lambda, sweep_bound } => match (lambda, sweep_bound) {
            (Some(l), None) => {
                let lam = ctx.weight(l)?;
                to_value(&verify_twist_identity(ctx.group()?, ctx.table()?, &lam)?)
            }
            (None, Some(b)) => twist_sweep(ctx, *b),
            _ => usage("give exactly one of --lambda and --sweep-bound"),
        },
        Command::Adjacent { weight, generator } => {
            let lam = ctx.weight(required(weight, "weight")?)?;
            let g = ctx.group()?;
            let s: Generator = generator.parse()?;
            g.check_generator(s)?;
            to_value(&AdjacentResponse { adjacent: g.adjacent_weight(&lam, s)?, weight: lam, generator: s.to_string() })
        }
        Command::Path { weight, all } => {
            let lam = ctx.weight(required(weight, "weight")?)?;
            let g = ctx.group()?;
            let paths = if *all { g.adjacent_paths_from_zero(&lam)? } else { vec![g.adjacent_path_from_zero(&lam)?] };
            to_value(&PathResponse { weight: lam, paths })
        }
        Command::Pairs { gens } => {
            let gens = gens.iter().map(|s| ctx.weight(s)).collect::<Result<Vec<_>, _>>()?;
            let g = ctx.group()?;
            let ideal = ideal_generated(ctx.rs()?, &gens)?;
            let pairs = g.adjacent_pairs_in_ideal(&ideal.elements)?;
            to_value(&PairsResponse { generators: gens, ideal_size: ideal.len(), pairs })
        }
        Command::LeviTruncate { levi, weight, omega } => {
            let h = levi_datum(ctx, levi)?;
            let lam = ctx.weight(required(weight, "weight")?)?;
            let omega = match omega {
                Some(o) => ctx.weight(o)?,
                None => lam.clone(),
            };
            let truncated = truncate_character(&weyl_character(ctx.rs()?, &lam)?, &h, &omega);
            let levi_character = levi_weyl_character(&h, &lam)?;
            to_value(&LeviTruncateResponse {
                levi: h.type_label(),
                kept: h.simple().iter().map(|i| i + 1).collect(),
                equal: truncated == levi_character,
                weight: lam,
                omega,
                truncated,
                levi_character,
            })
        }
        Command::DonkinCheck { levi, weight, sweep_bound } => {
            let h = levi_datum(ctx, levi)?;
            let kept: Vec<usize> = h.simple().iter().map(|i| i + 1).collect();
            match (weight, sweep_bound) {
                (Some(w), None) => {
                    let lam = ctx.weight(w)?;
                    to_value(&DonkinResponse {
                        levi: h.type_label(),
                        kept,
                        equal: donkin_check(&h, &lam)?,
                        weight: lam,
                    })
                }
                (None, Some(b)) => donkin_sweep(ctx, &h, kept, *b),
                _ => usage("give exactly one of --weight and --sweep-bound"),
            }
        }
        Command::Partition { tool } => partition_tool(ctx, tool),
    }
}

fn rootsys(ctx: &Context) -> Out {
    let rs = ctx.rs()?;
    to_value(&RootsysResponse {
        cartan_type: rs.cartan_type().to_string(),
        rank: rs.rank(),
        cartan_matrix: rs.cartan_matrix().to_vec(),
        coxeter_number: rs.coxeter_number(),
        rho: rs.rho().clone(),
        highest_short_root: rs.highest_short_root().simple_coords.clone(),
        weyl_group_order: rs.weyl_group_elements().len(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .map(|r| RootInfo {
                simple_coords: r.simple_coords.clone(),
                weight: r.weight.clone(),
                coroot_coords: r.coroot_coords.clone(),
                half_norm: r.half_norm,
            })
            .collect(),
    })
}

fn alcove(ctx: &Context, weight: &str) -> Out {
    let lam = ctx.weight(weight)?;
    let (rs, p) = (ctx.rs()?, ctx.p()?);
    let dominant = rs.is_dominant(&lam);
    let mut out = AlcoveResponse {
        regular: is_regular(rs, &lam, p),
        dominant,
        restricted: dominant && is_restricted(rs, &lam, p)?,
        in_jantzen_region: dominant && in_jantzen_region(rs, &lam, p)?,
        walls: alcove_of(rs, &lam, p),
        element: None,
        length: None,
        base: None,
        weight: lam,
        p,
    };
    if out.regular {
        let g = ctx.group()?;
        let (x, base) = g.element_for_weight(&out.weight)?;
        out.element = Some(ctx.word(&x)?);
        out.length = Some(g.length(&x));
        out.base = Some(base);
    }
    to_value(&out)
}

fn length(ctx: &Context, word: Option<&str>, weight: Option<&str>) -> Out {
    let input = match (word, weight) {
        (Some(w), None) | (None, Some(w)) => w,
        _ => return usage("give exactly one of --word and --weight"),
    };
    let x = if word.is_some() {
        ctx.group()?.from_word(&parse_word(input)?)?
    } else {
        ctx.group()?.element_for_weight(&ctx.weight(input)?)?.0
    };
    let g = ctx.group()?;
    to_value(&LengthResponse {
        input: input.to_string(),
        reduced_word: ctx.word(&x)?,
        length: g.length(&x),
        walls: g.alcove_of_element(&x),
    })
}

fn kl(ctx: &Context, y: &str, x: &str) -> Out {
    let (ey, ex) = (ctx.element(y)?, ctx.element(x)?);
    let g = ctx.group()?;
    let table = ctx.table()?;
    let poly = table.kl_polynomial(&ey, &ex);
    to_value(&KlResponse {
        y: ctx.word(&ey)?,
        x: ctx.word(&ex)?,
        length_y: g.length(&ey),
        length_x: g.length(&ex),
        leq: g.bruhat_leq(&ey, &ex),
        polynomial: poly.to_string(),
        coefficients: poly,
        mu: table.mu(&ey, &ex),
    })
}

fn lcf(ctx: &Context, weight: &str) -> Out {
    let lam = ctx.weight(weight)?;
    let (g, table) = (ctx.group()?, ctx.table()?);
    let rs = g.root_system();
    let dv = lusztig_delta_vector(g, table, &lam)?;
    let (x, base) = g.element_for_weight(&lam)?;
    let character = dv.expand(rs)?;
    to_value(&LcfResponse {
        p: g.p(),
        element: ctx.word(&x)?,
        base,
        rendered: dv.to_string(),
        dimension: dv.dimension(rs)?,
        is_character: character.first_negative().is_none(),
        character,
        delta_vector: dv,
        weight: lam,
    })
}

/// Every dominant `lambda` with `p lambda` regular and
/// `<p lambda + rho, alpha_0^vee> <= bound`.
fn twist_sweep(ctx: &Context, bound: i64) -> Out {
    let (g, table) = (ctx.group()?, ctx.table()?);
    let (rs, p) = (g.root_system(), g.p());
    let a0 = rs.highest_short_root_index();
    let cases: Vec<Weight> = dominant_box(rs.rank(), bound / p)
        .into_iter()
        .filter(|lam| {
            let pl = lam.scaled(p);
            rs.pair_index(&(&pl + rs.rho()), a0) <= bound && is_regular(rs, &pl, p)
        })
        .collect();
    let reports = cases
        .par_iter()
        .map(|lam| verify_twist_identity(g, table, lam))
        .collect::<Result<Vec<TwistReport>, Error>>()?;
    let mut failures: Vec<TwistReport> = reports.into_iter().filter(|r| !r.verdict).collect();
    failures.sort_by(|a, b| a.weight.cmp(&b.weight));
    to_value(&TwistSweepResponse {
        cartan_type: rs.cartan_type().to_string(),
        p,
        bound,
        cases: cases.len(),
        passed: cases.len() - failures.len(),
        failed: failures.len(),
        within_hypotheses: twist_identity_hypotheses(rs, p),
        failures,
    })
}

/// Every dominant `lambda` with `<lambda + rho, alpha_0^vee> <= bound`.
fn donkin_sweep(ctx: &Context, h: &LeviDatum, kept: Vec<usize>, bound: i64) -> Out {
    let rs = ctx.rs()?;
    let a0 = rs.highest_short_root_index();
    let cases: Vec<Weight> = dominant_box(rs.rank(), bound)
        .into_iter()
        .filter(|lam| rs.pair_index(&(lam + rs.rho()), a0) <= bound)
        .collect();
    let verdicts = cases.par_iter().map(|lam| donkin_check(h, lam)).collect::<Result<Vec<bool>, Error>>()?;
    let failures: Vec<Weight> = cases.iter().zip(&verdicts).filter(|(_, ok)| !**ok).map(|(w, _)| w.clone()).collect();
    to_value(&DonkinSweepResponse { levi: h.type_label(), kept, bound, cases: cases.len(), failures })
}

fn partition_tool(ctx: &Context, tool: &PartitionTool) -> Out {
    let r = match tool {
        PartitionTool::ToWeight { lambda, n, type_c } => {
            let lambda = partition(required(lambda, "lambda")?)?;
            let weight = if *type_c {
                typea::partition_to_weight_c(&lambda, *n)?
            } else {
                typea::partition_to_weight(&lambda, *n)?
            };
            PartitionResponse::ToWeight { lambda, n: *n, type_c: *type_c, weight }
        }
        PartitionTool::Dominance { lambda, mu } => {
            let (lambda, mu) = (partition(lambda)?, partition(mu)?);
            PartitionResponse::Dominance {
                leq: typea::dominance_leq(&lambda, &mu),
                geq: typea::dominance_leq(&mu, &lambda),
                lambda,
                mu,
            }
        }
        PartitionTool::Dual { lambda } => {
            let lambda = partition(required(lambda, "lambda")?)?;
            PartitionResponse::Dual { dual: typea::dual_partition(&lambda), lambda }
        }
        PartitionTool::CosetEq { lambda, mu, n, d, type_c } => {
            let (lambda, mu) = (partition(lambda)?, partition(mu)?);
            let equal = if *type_c {
                typea::coset_eq_d_type_c(&lambda, &mu, *n, *d)?
            } else {
                typea::coset_eq_d(&lambda, &mu, *n, *d)?
            };
            PartitionResponse::CosetEq { lambda, mu, n: *n, d: *d, type_c: *type_c, equal }
        }
        PartitionTool::Regular { lambda, n } => {
            let lambda = partition(required(lambda, "lambda")?)?;
            let p = ctx.p()?;
            PartitionResponse::Regular { regular: typea::is_regular_partition(&lambda, *n, p)?, lambda, n: *n, p }
        }
        PartitionTool::Jantzen { lambda, n } => {
            let lambda = partition(required(lambda, "lambda")?)?;
            let p = ctx.p()?;
            PartitionResponse::Jantzen { in_region: typea::in_jantzen_partition(&lambda, *n, p)?, lambda, n: *n, p }
        }
        PartitionTool::Reflect { nu, omega, n } => {
            let (nu, omega) = (partition(nu)?, partition(omega)?);
            let p = ctx.p()?;
            PartitionResponse::Reflect { witness: typea::reflection_related(&nu, &omega, *n, p)?, nu, omega, n: *n, p }
        }
        PartitionTool::Split { lambda, d } => {
            let lambda = partition(required(lambda, "lambda")?)?;
            let (head, tail) = typea::prefix_split(&lambda, *d)?;
            PartitionResponse::Split { lambda, d: *d, head, tail }
        }
    };
    to_value(&r)
}

/// The argument a batch file line substitutes into, if the command has one.
pub fn batch_slot(cmd: &mut Command) -> Option<&mut Option<String>> {
    match cmd {
        Command::Alcove { weight }
        | Command::Length { weight, .. }
        | Command::Char { weight }
        | Command::Twist { weight }
        | Command::Lcf { weight }
        | Command::Adjacent { weight, .. }
        | Command::Path { weight, .. }
        | Command::LeviTruncate { weight, .. }
        | Command::DonkinCheck { weight, .. } => Some(weight),
        Command::VerifyTwist { lambda, .. } => Some(lambda),
        Command::Partition {
            tool:
                PartitionTool::ToWeight { lambda, .. }
                | PartitionTool::Dual { lambda }
                | PartitionTool::Regular { lambda, .. }
                | PartitionTool::Jantzen { lambda, .. }
                | PartitionTool::Split { lambda, .. },
        } => Some(lambda),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_counts() {
        assert_eq!(dominant_box(2, 2).len(), 9);
        assert_eq!(dominant_box(1, 0), vec![Weight::new(vec![0])]);
        assert!(dominant_box(3, -1).is_empty());
    }

    #[test]
    fn indices_and_terms() {
        assert_eq!(parse_indices("1, 3").unwrap(), vec![1, 3]);
        assert_eq!(parse_indices("").unwrap(), Vec::<usize>::new());
        assert!(parse_indices("0").is_err());
        let ctx = Context::new(Some("A2".into()), None);
        let (w, m) = parse_term(&ctx, "1,1=-2").unwrap();
        assert_eq!((w, m), (Weight::new(vec![1, 1]), BigInt::from(-2)));
        assert_eq!(parse_term(&ctx, "(0,0)").unwrap().1, BigInt::from(1));
        assert_eq!(parse_term(&ctx, "1=1").unwrap_err().exit_code(), 1);
        assert_eq!(parse_term(&ctx, "1,x").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn missing_type_is_a_usage_error() {
        let ctx = Context::new(None, Some(3));
        let e = run(&ctx, &Command::Rootsys).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert_eq!(e.response().kind, "usage");
    }

    #[test]
    fn elements_from_words_and_weights() {
        let ctx = Context::new(Some("A2".into()), Some(3));
        let x = ctx.element("(4,1)").unwrap();
        assert_eq!(ctx.group().unwrap().length(&x), 6);
        assert_eq!(ctx.word(&ctx.element("id").unwrap()).unwrap(), "e");
        assert_eq!(ctx.element("s1 s1").unwrap(), ctx.element("e").unwrap());
    }
}
