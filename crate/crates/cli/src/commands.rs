use num_bigint::BigInt;
use nullcover::cover::{
    build_nullset, cover_product_slalom, cube_cover_check, find_translator, first_depth_below,
    measure_bound, measure_upper, padic_cover_with_blocks, plan_blocks_padic,
    plan_blocks_product, random_slalom, verify_cover, CarryStats, PadicBlockTranslate,
};
use nullcover::nullset::{ek_membership, ek_outer_measure, ek_sup, factorial_expand};
use nullcover::structure::{
    classify_subgroup, divisible_chain, dual, max_chain_depth, niceness_pipeline,
    primary_decomposition, rule_registry,
};
use nullcover::{
    BlockPlan, Caps, CoverCertificate, ExactRational, FiniteAbelianGroup, GroupDescriptor,
    IndexSet, NullsetSpec, Slalom, WidthFn,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::args::{
    ChainArgs, Command, CoverCommand, EkCommand, MeasureArgs, PlanArgs, RationalArgs, Width,
};
use crate::failure::Failure;

/// Output of `cover`, input of `verify`.
#[derive(Debug, Serialize, Deserialize)]
pub struct CoverBundle {
    pub nullset: NullsetSpec,
    pub slalom: Slalom,
    pub certificate: CoverCertificate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<PadicBlockTranslate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carry: Option<CarryStats>,
}

/// Input of `cube-check`.
#[derive(Debug, Deserialize)]
struct CubeInput {
    plan: BlockPlan,
    family: Vec<Slalom>,
}

pub struct Context<'a> {
    pub seed: u64,
    pub caps: Caps,
    pub input: Option<&'a Value>,
}

impl Context<'_> {
    fn input<T: DeserializeOwned>(&self, what: &str) -> Result<T, Failure> {
        let value = self
            .input
            .ok_or_else(|| Failure::schema(format!("{what} expected on --in")))?;
        serde_json::from_value(value.clone())
            .map_err(|e| Failure::schema(format!("invalid {what}: {e}")))
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<Value, Failure> {
    serde_json::to_value(value).map_err(|e| Failure::new(crate::failure::FailureClass::Internal, e))
}

fn resolve_plan(args: &PlanArgs, ctx: &Context) -> Result<BlockPlan, Failure> {
    let depth = || {
        args.depth
            .ok_or_else(|| Failure::schema("--depth is required with --p or --orders"))
    };
    if let Some(p) = args.p {
        return Ok(plan_blocks_padic(p, depth()?)?);
    }
    if let Some(orders) = &args.orders {
        if orders.is_empty() {
            return Err(Failure::schema("--orders needs at least one value"));
        }
        return Ok(plan_blocks_product(orders.iter().copied().cycle(), depth()?)?);
    }
    ctx.input("block plan")
}

fn parse_rational(num: &str, den: &str) -> Result<ExactRational, Failure> {
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Failure::schema(format!("numerator {num:?} is not an integer")))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Failure::schema(format!("denominator {den:?} is not an integer")))?;
    if den == BigInt::from(0) {
        return Err(Failure::schema("denominator is zero"));
    }
    Ok(ExactRational::new(num, den))
}

fn rational_json(q: &ExactRational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

/// `q` truncated to `digits` decimal places, for values in `[0, 1)`.
pub fn decimal(q: &ExactRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (q * ExactRational::from_integer(scale)).floor().to_integer();
    format!("0.{:0>digits$}", scaled.to_string())
}

fn group(orders: &[u64]) -> Result<FiniteAbelianGroup, Failure> {
    Ok(FiniteAbelianGroup::new(orders.to_vec())?)
}

pub fn run(command: &Command, ctx: &Context) -> Result<Value, Failure> {
    match command {
        Command::Plan(args) => to_json(&resolve_plan(args, ctx)?),
        Command::BuildNullset(args) => to_json(&build_nullset(&resolve_plan(args, ctx)?)?),
        Command::Cover(cover) => run_cover(cover, ctx),
        Command::Verify => {
            let bundle: CoverBundle = ctx.input("cover bundle")?;
            let report = verify_cover(
                &bundle.nullset,
                &bundle.certificate.translate,
                &bundle.slalom,
                &ctx.caps,
            )?;
            to_json(&report)
        }
        Command::Measure(args) => run_measure(args, ctx),
        Command::Ek(ek) => run_ek(ek),
        Command::FindTranslator(args) => {
            let g = group(&args.orders)?;
            let a = IndexSet::from_indices(g.order(), args.a.iter().copied()).map_err(|bad| {
                Failure::schema(format!("A contains {bad}, outside a group of order {}", g.order()))
            })?;
            let mut s = args.s.clone();
            s.sort_unstable();
            s.dedup();
            let t = find_translator(&g, &a, &s, args.n, &ctx.caps)?;
            Ok(json!({
                "translator": {
                    "index": t.translator,
                    "residues": g.element_at(t.translator)?,
                },
                "forbidden_size": t.forbidden,
            }))
        }
        Command::Classify => {
            to_json(&classify_subgroup(&ctx.input::<GroupDescriptor>("group descriptor")?)?)
        }
        Command::Dual => to_json(&dual(&ctx.input::<GroupDescriptor>("group descriptor")?)),
        Command::Decompose => {
            let parts = primary_decomposition(&ctx.input("group descriptor")?)?;
            Ok(Value::Array(
                parts
                    .iter()
                    .map(|(p, part)| json!({"p": p, "part": part}))
                    .collect(),
            ))
        }
        Command::Pipeline(args) => {
            if args.rules {
                to_json(&rule_registry())
            } else {
                to_json(&niceness_pipeline(&ctx.input("group descriptor")?))
            }
        }
        Command::Chain(args) => run_chain(args, ctx),
        Command::SlalomGen(args) => {
            let plan = resolve_plan(&args.plan, ctx)?;
            let width = match args.width {
                Width::Linear => WidthFn::Linear,
                Width::Half => WidthFn::Half,
            };
            to_json(&random_slalom(&plan, width, ctx.seed)?)
        }
        Command::CubeCheck => {
            let input: CubeInput = ctx.input("cube-check input")?;
            to_json(&cube_cover_check(&input.family, &input.plan, &ctx.caps)?)
        }
    }
}

fn run_cover(cover: &CoverCommand, ctx: &Context) -> Result<Value, Failure> {
    let (plan, width) = match cover {
        CoverCommand::Product { orders, depth } => {
            if orders.is_empty() {
                return Err(Failure::schema("--orders needs at least one value"));
            }
            (
                plan_blocks_product(orders.iter().copied().cycle(), *depth)?,
                WidthFn::Linear,
            )
        }
        CoverCommand::Padic { p, depth } => (plan_blocks_padic(*p, *depth)?, WidthFn::Half),
    };
    let nullset = build_nullset(&plan)?;
    let slalom = match ctx.input {
        Some(_) => ctx.input::<Slalom>("slalom")?,
        None => random_slalom(&plan, width, ctx.seed)?,
    };
    let bundle = match cover {
        CoverCommand::Product { .. } => CoverBundle {
            certificate: cover_product_slalom(&nullset, &slalom, &ctx.caps)?,
            nullset,
            slalom,
            blocks: None,
            carry: None,
        },
        CoverCommand::Padic { .. } => {
            let padic = plan.padic_context()?;
            let (certificate, blocks, report) =
                padic_cover_with_blocks(&padic, &nullset, &slalom, &ctx.caps)?;
            CoverBundle {
                certificate,
                nullset,
                slalom,
                blocks: Some(blocks),
                carry: report.carry,
            }
        }
    };
    to_json(&bundle)
}

fn run_measure(args: &MeasureArgs, ctx: &Context) -> Result<Value, Failure> {
    if let Some(threshold) = &args.threshold {
        let (num, den) = threshold
            .split_once('/')
            .unwrap_or((threshold.as_str(), "1"));
        let t = parse_rational(num, den)?;
        let first = first_depth_below(&t, args.limit);
        return Ok(json!({
            "threshold": rational_json(&t),
            "first_depth": first,
            "bound": first.map(|n| rational_json(&measure_bound(n))),
        }));
    }
    let nullset = if args.plan.p.is_some() || args.plan.orders.is_some() {
        build_nullset(&resolve_plan(&args.plan, ctx)?)?
    } else {
        ctx.input::<NullsetSpec>("nullset")?
    };
    let blocks = args.blocks.unwrap_or(nullset.depth());
    to_json(&measure_upper(&nullset, blocks)?)
}

fn run_ek(ek: &EkCommand) -> Result<Value, Failure> {
    let rational = |args: &RationalArgs| parse_rational(&args.num, &args.den);
    match ek {
        EkCommand::Member(args) => {
            let verdict = ek_membership(&rational(args)?, args.depth)?;
            Ok(json!({"verdict": verdict}))
        }
        EkCommand::Expand(args) => to_json(&factorial_expand(&rational(args)?, args.depth)?),
        EkCommand::Measure { depth } => {
            let m = ek_outer_measure(*depth)?;
            Ok(json!({"depth": depth, "measure": rational_json(&m)}))
        }
        EkCommand::Sup { depth } => {
            let s = ek_sup(*depth)?;
            Ok(json!({
                "depth": depth,
                "sup": rational_json(&s),
                "decimal": decimal(&s, 15),
            }))
        }
    }
}

fn run_chain(args: &ChainArgs, ctx: &Context) -> Result<Value, Failure> {
    let g = group(&args.orders)?;
    if args.max {
        return to_json(&max_chain_depth(&g, args.p, &ctx.caps)?);
    }
    let depth = args.depth.expect("clap requires --depth without --max");
    let chain = divisible_chain(&g, args.p, depth, &ctx.caps)?;
    Ok(json!({ "chain": chain }))
}
