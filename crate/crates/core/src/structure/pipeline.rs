use serde::{Deserialize, Serialize};

use super::{classify_subgroup, dual, GroupDescriptor};

/// Rewrite rules a reduction trace may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Discrete,
    OpenSubgroup,
    RealFactor,
    Dualize,
    Trichotomy,
    DualizeWitness,
    TerminalCircle,
    TerminalProduct,
    TerminalPadic,
}

/// Registry entry: the rule, its tag, whether it ends a trace, and the
/// mathematical fact that licenses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleInfo {
    pub rule: Rule,
    pub terminal: bool,
    pub basis: &'static str,
}

const REGISTRY: &[RuleInfo] = &[
    RuleInfo {
        rule: Rule::Discrete,
        terminal: true,
        basis: "in a discrete group every nonempty set has positive Haar measure, so the only null set is empty",
    },
    RuleInfo {
        rule: Rule::OpenSubgroup,
        terminal: false,
        basis: "structure theorem: every LCA group has an open subgroup of the form K + R^n with K compact",
    },
    RuleInfo {
        rule: Rule::RealFactor,
        terminal: true,
        basis: "R has the covering property, and it passes from a quotient to the whole group",
    },
    RuleInfo {
        rule: Rule::Dualize,
        terminal: false,
        basis: "the quotients of a compact group correspond to the subgroups of its discrete dual",
    },
    RuleInfo {
        rule: Rule::Trichotomy,
        terminal: false,
        basis: "an infinite abelian group contains Z, a countable sum of nontrivial finite groups, or a quasicyclic group",
    },
    RuleInfo {
        rule: Rule::DualizeWitness,
        terminal: false,
        basis: "the dual of the witness subgroup is a quotient of the compact group, and the property passes from quotients",
    },
    RuleInfo {
        rule: Rule::TerminalCircle,
        terminal: true,
        basis: "the circle group has the covering property",
    },
    RuleInfo {
        rule: Rule::TerminalProduct,
        terminal: true,
        basis: "a countable product of nontrivial finite groups has the covering property",
    },
    RuleInfo {
        rule: Rule::TerminalPadic,
        terminal: true,
        basis: "the p-adic integers have the covering property",
    },
];

/// Every rule with its justification, in pipeline order.
pub fn rule_registry() -> &'static [RuleInfo] {
    REGISTRY
}

impl Rule {
    fn default_justification(self) -> &'static str {
        match self {
            Rule::Discrete => "only-empty-null",
            Rule::OpenSubgroup => "open-subgroup-suffices",
            Rule::RealFactor => "reals-nice",
            Rule::Dualize => "pontryagin-duality",
            Rule::Trichotomy => "subgroup-found",
            Rule::DualizeWitness => "quotient-inherits",
            Rule::TerminalCircle => "circle-nice",
            Rule::TerminalProduct => "product-nice",
            Rule::TerminalPadic => "padic-nice",
        }
    }

    pub fn info(self) -> &'static RuleInfo {
        REGISTRY
            .iter()
            .find(|r| r.rule == self)
            .expect("every rule is registered")
    }

    pub fn tag(self) -> &'static str {
        match self {
            Rule::Discrete => "discrete",
            Rule::OpenSubgroup => "open-subgroup",
            Rule::RealFactor => "real-factor",
            Rule::Dualize => "dualize",
            Rule::Trichotomy => "trichotomy",
            Rule::DualizeWitness => "dualize-witness",
            Rule::TerminalCircle => "terminal-circle",
            Rule::TerminalProduct => "terminal-product",
            Rule::TerminalPadic => "terminal-padic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub before: GroupDescriptor,
    pub after: GroupDescriptor,
    pub justification: String,
}

/// Ordered rewrite steps; serialized as a bare JSON array.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    fn push(&mut self, rule: Rule, before: &GroupDescriptor, after: &GroupDescriptor) {
        self.push_with(rule, before, after, rule.default_justification());
    }

    fn push_with(
        &mut self,
        rule: Rule,
        before: &GroupDescriptor,
        after: &GroupDescriptor,
        justification: &str,
    ) {
        self.steps.push(TraceStep {
            rule,
            before: before.clone(),
            after: after.clone(),
            justification: justification.to_string(),
        });
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NicenessVerdict {
    #[serde(rename = "nice")]
    Nice,
    #[serde(rename = "not-nice: discrete")]
    NotNiceDiscrete,
    #[serde(rename = "not-nice: large-index")]
    NotNiceLargeIndex,
    #[serde(rename = "unresolved")]
    Unresolved,
}

/// Side condition attached to every verdict reached through an open
/// subgroup: its index must not exceed cof(N). It is a cardinal condition
/// and is never evaluated.
pub const INDEX_SIDE_CONDITION: &str = "index-at-most-cof-null";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineOutcome {
    pub verdict: NicenessVerdict,
    pub trace: ReductionTrace,
    pub side_conditions: Vec<String>,
    /// The descriptor no rule applied to, for `unresolved` verdicts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stuck_at: Option<GroupDescriptor>,
}

fn terminal_rule(d: &GroupDescriptor) -> Option<Rule> {
    match d {
        GroupDescriptor::Torus => Some(Rule::TerminalCircle),
        GroupDescriptor::ProdOmega { .. } => Some(Rule::TerminalProduct),
        GroupDescriptor::Padic { .. } => Some(Rule::TerminalPadic),
        _ => None,
    }
}

/// Decides whether a group has the translate-covering property for null
/// sets by reducing it to a known case.
///
/// Discrete groups fail outright. Otherwise the discrete summands are
/// dropped to reach an open subgroup `K + R^n`; a real factor finishes the
/// proof, a terminal compact group finishes it directly, and any other
/// compact group is dualized, classified, and the witness dualized back to
/// a terminal quotient.
pub fn niceness_pipeline(d: &GroupDescriptor) -> PipelineOutcome {
    let mut trace = ReductionTrace::default();
    let mut side_conditions = Vec::new();
    let done = |verdict, trace, side_conditions, stuck_at| PipelineOutcome {
        verdict,
        trace,
        side_conditions,
        stuck_at,
    };

    if d.is_discrete() {
        trace.push(Rule::Discrete, d, d);
        return done(NicenessVerdict::NotNiceDiscrete, trace, side_conditions, None);
    }
    if let Some(rule) = terminal_rule(d) {
        trace.push(rule, d, d);
        return done(NicenessVerdict::Nice, trace, side_conditions, None);
    }

    let summands = d.summands();
    let kept: Vec<GroupDescriptor> = summands
        .iter()
        .filter(|s| !s.is_discrete() || s.is_compact())
        .map(|s| (*s).clone())
        .collect();
    let h = GroupDescriptor::sum_of(kept);
    if h != *d {
        trace.push(Rule::OpenSubgroup, d, &h);
        side_conditions.push(INDEX_SIDE_CONDITION.to_string());
    }

    let has_real = h
        .summands()
        .iter()
        .any(|s| matches!(s, GroupDescriptor::Reals | GroupDescriptor::RPower { .. }));
    if has_real {
        trace.push(Rule::RealFactor, &h, &GroupDescriptor::Reals);
        return done(NicenessVerdict::Nice, trace, side_conditions, None);
    }
    if let Some(rule) = terminal_rule(&h) {
        trace.push(rule, &h, &h);
        return done(NicenessVerdict::Nice, trace, side_conditions, None);
    }
    if !h.is_compact() {
        return done(NicenessVerdict::Unresolved, trace, side_conditions, Some(h));
    }

    let h_dual = dual(&h);
    trace.push(Rule::Dualize, &h, &h_dual);
    let verdict = match classify_subgroup(&h_dual) {
        Ok(v) => v,
        Err(_) => return done(NicenessVerdict::Unresolved, trace, side_conditions, Some(h_dual)),
    };
    let case = format!("case-{}", verdict.case.number());
    trace.push_with(Rule::Trichotomy, &h_dual, &verdict.witness, &case);
    let quotient = dual(&verdict.witness);
    trace.push(Rule::DualizeWitness, &verdict.witness, &quotient);
    match terminal_rule(&quotient) {
        Some(rule) => {
            trace.push(rule, &quotient, &quotient);
            done(NicenessVerdict::Nice, trace, side_conditions, None)
        }
        None => done(NicenessVerdict::Unresolved, trace, side_conditions, Some(quotient)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupDescriptor::*;

    fn rules(o: &PipelineOutcome) -> Vec<Rule> {
        o.trace.steps.iter().map(|s| s.rule).collect()
    }

    #[test]
    fn terminals_take_one_step() {
        for (d, rule) in [
            (Torus, Rule::TerminalCircle),
            (Padic { p: 7 }, Rule::TerminalPadic),
            (
                ProdOmega {
                    parts: vec![Cyclic { m: 2 }],
                },
                Rule::TerminalProduct,
            ),
        ] {
            let o = niceness_pipeline(&d);
            assert_eq!(o.verdict, NicenessVerdict::Nice);
            assert_eq!(rules(&o), vec![rule]);
            assert!(o.side_conditions.is_empty());
        }
    }

    #[test]
    fn discrete_groups_are_not_nice() {
        for d in [
            Int,
            FiniteSum {
                parts: vec![Int, Cyclic { m: 3 }],
            },
            Cyclic { m: 5 },
            Quasicyclic { p: 2 },
        ] {
            let o = niceness_pipeline(&d);
            assert_eq!(o.verdict, NicenessVerdict::NotNiceDiscrete);
            assert_eq!(rules(&o), vec![Rule::Discrete]);
        }
    }

    #[test]
    fn compact_sum_goes_through_duality() {
        let d = FiniteSum {
            parts: vec![Torus, Cyclic { m: 2 }],
        };
        let o = niceness_pipeline(&d);
        assert_eq!(o.verdict, NicenessVerdict::Nice);
        assert_eq!(
            rules(&o),
            vec![
                Rule::Dualize,
                Rule::Trichotomy,
                Rule::DualizeWitness,
                Rule::TerminalCircle
            ]
        );
        assert_eq!(o.trace.last().unwrap().after, Torus);
        assert_eq!(o.trace.steps[1].justification, "case-1");
    }

    #[test]
    fn discrete_part_is_split_off() {
        let d = FiniteSum {
            parts: vec![Int, RPower { n: 2 }, Torus],
        };
        let o = niceness_pipeline(&d);
        assert_eq!(o.verdict, NicenessVerdict::Nice);
        assert_eq!(rules(&o), vec![Rule::OpenSubgroup, Rule::RealFactor]);
        assert_eq!(o.side_conditions, vec![INDEX_SIDE_CONDITION.to_string()]);

        let d = FiniteSum {
            parts: vec![Quasicyclic { p: 3 }, Padic { p: 5 }],
        };
        let o = niceness_pipeline(&d);
        assert_eq!(rules(&o), vec![Rule::OpenSubgroup, Rule::TerminalPadic]);
    }

    #[test]
    fn registry_is_complete_and_serializes_tags() {
        assert_eq!(rule_registry().len(), 9);
        for info in rule_registry() {
            let json = serde_json::to_value(info.rule).unwrap();
            assert_eq!(json, serde_json::Value::String(info.rule.tag().into()));
            assert_eq!(info.rule.info(), info);
        }
    }

    #[test]
    fn trace_is_a_json_array() {
        let o = niceness_pipeline(&Torus);
        let v = serde_json::to_value(&o).unwrap();
        assert_eq!(v["verdict"], "nice");
        assert_eq!(v["trace"][0]["rule"], "terminal-circle");
        assert!(v["trace"].is_array());
    }
}
