//! A direct Rust implementation of the benchmark insurance contract, used as
//! ground truth when judging logic-program encodings of the same contract.
//!
//! The contract in one paragraph: hospitalization costs are covered while the
//! policy is in effect. The policy starts at day 0 and runs for one year. If
//! the insured has not, within six months of the start date, visited a
//! physician for a wellness visit (confirmed by the physician within seven
//! months of the start date), the policy lapses at seven months. Claims are
//! covered only for hospitalization due to sickness or accidental injury,
//! are void if the injury stems from a listed hazardous activity (skydiving,
//! military service, firefighting service, police service) or is intentional,
//! and only while the insured is younger than 80. Fraud voids everything.

use std::fmt;

/// Day counts used by the contract arithmetic. Months are counted on the
/// benchmark's convention: a month is 30.5 days, rounded to whole days —
/// five months is day 150, six day 183, six and a half day 198, seven day
/// 213, eight day 244 — with a 365-day policy term.
pub mod days {
    pub const FIVE_MONTHS: i64 = 150;
    pub const SIX_MONTHS: i64 = 183;
    pub const SIX_AND_A_HALF_MONTHS: i64 = 198;
    pub const SEVEN_MONTHS: i64 = 213;
    pub const EIGHT_MONTHS: i64 = 244;
    pub const POLICY_TERM: i64 = 365;
}

/// Why the insured was hospitalized.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Reason {
    Sickness,
    AccidentalInjury,
    /// Deliberate self-injury — named in the contract's exclusion list and
    /// also outside the two covered reasons.
    IntentionalInjury,
}

impl Reason {
    /// The atom the benchmark encodings use for this reason.
    pub fn atom(self) -> &'static str {
        match self {
            Reason::Sickness => "sickness",
            Reason::AccidentalInjury => "accidental_injury",
            Reason::IntentionalInjury => "intentional_injury",
        }
    }
}

/// The activity that caused the injury, when the claim names one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cause {
    /// No listed activity involved.
    Unlisted,
    Skydiving,
    MilitaryService,
    FirefightingService,
    PoliceService,
}

impl Cause {
    /// The atom the benchmark encodings use, or `None` for [`Cause::Unlisted`].
    pub fn atom(self) -> Option<&'static str> {
        match self {
            Cause::Unlisted => None,
            Cause::Skydiving => Some("skydiving"),
            Cause::MilitaryService => Some("military_service"),
            Cause::FirefightingService => Some("firefighting_service"),
            Cause::PoliceService => Some("police_service"),
        }
    }
}

/// One concrete claim situation, with all facts the contract can depend on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scenario {
    /// Day of the claim, counted from the policy start date (day 0).
    pub claim_day: i64,
    /// Day of the wellness visit, if one happened.
    pub visit_day: Option<i64>,
    /// Day the physician confirmed the wellness visit, if confirmed.
    pub confirm_day: Option<i64>,
    pub reason: Reason,
    pub cause: Cause,
    /// Age of the insured at hospitalization.
    pub age: i64,
    /// Whether the insured committed fraud or material misrepresentation.
    pub fraud: bool,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "day {} {:?}/{:?} visit {:?} confirm {:?} age {} fraud {}",
            self.claim_day, self.reason, self.cause, self.visit_day, self.confirm_day,
            self.age, self.fraud
        )
    }
}

/// Section 1.3: the wellness-visit condition is satisfied when a visit
/// happened within six months of the start date and the physician confirmed
/// it within seven months (necessarily at or after the visit itself).
pub fn wellness_condition_satisfied(s: &Scenario) -> bool {
    match (s.visit_day, s.confirm_day) {
        (Some(visit), Some(confirm)) => {
            visit >= 0
                && visit <= days::SIX_MONTHS
                && confirm >= visit
                && confirm <= days::SEVEN_MONTHS
        }
        _ => false,
    }
}

/// Sections 1.1–1.3 and 3.x: the policy is in effect on the claim day when no
/// fraud occurred, the day falls inside the one-year term, and — from seven
/// months onward — the wellness-visit condition was satisfied.
pub fn policy_in_effect(s: &Scenario) -> bool {
    !s.fraud
        && s.claim_day >= 0
        && s.claim_day < days::POLICY_TERM
        && (s.claim_day < days::SEVEN_MONTHS || wellness_condition_satisfied(s))
}

/// Section 2 plus the exclusion list: a claim is covered when the policy is
/// in effect, the hospitalization is due to sickness or accidental injury,
/// no listed hazardous activity caused it, and the insured is under 80.
pub fn claim_covered(s: &Scenario) -> bool {
    policy_in_effect(s)
        && matches!(s.reason, Reason::Sickness | Reason::AccidentalInjury)
        && s.cause == Cause::Unlisted
        && s.age < 80
}

/// Renders the scenario as a goal for the reference five-argument encoding
/// shape `claim_covered(ClaimDay, VisitDay, ConfirmDay, Reason, Age)`.
///
/// That shape folds the cause into the reason argument: when a listed
/// activity caused the injury the activity atom is passed where the reason
/// goes (it then fails the covered-reason test, which is exactly the
/// contract's verdict). Missing visit/confirmation days are rendered as 0 on
/// the convention the benchmark queries use.
pub fn reference_query_goal(s: &Scenario) -> String {
    let reason_or_cause = s.cause.atom().unwrap_or_else(|| s.reason.atom());
    format!(
        "claim_covered({}, {}, {}, {}, {})",
        s.claim_day,
        s.visit_day.unwrap_or(0),
        s.confirm_day.unwrap_or(0),
        reason_or_cause,
        s.age
    )
}

/// One of the nine benchmark questions: a claim scenario and the contract's
/// answer, as adjudicated by this module.
#[derive(Clone, Debug)]
pub struct BenchmarkCase {
    /// Query id, `q1` through `q9`.
    pub id: String,
    /// Short description of the claim being asked about.
    pub claim: String,
    pub scenario: Scenario,
    /// Whether the claim is covered.
    pub gold: bool,
}

/// The nine benchmark questions, in order.
pub fn benchmark_cases() -> Vec<BenchmarkCase> {
    let case = |id: &str, claim: &str, scenario: Scenario| {
        let gold = claim_covered(&scenario);
        BenchmarkCase { id: id.to_string(), claim: claim.to_string(), scenario, gold }
    };
    vec![
        case(
            "q1",
            "Injured while serving as a firefighter; hospitalized on day 100; \
             wellness visit day 150 confirmed day 160; age 40.",
            Scenario {
                claim_day: 100,
                visit_day: Some(days::FIVE_MONTHS),
                confirm_day: Some(160),
                reason: Reason::AccidentalInjury,
                cause: Cause::FirefightingService,
                age: 40,
                fraud: false,
            },
        ),
        case(
            "q2",
            "Hospitalized for sickness on day 200; wellness visit day 150 \
             confirmed day 160; age 78.",
            Scenario {
                claim_day: 200,
                visit_day: Some(days::FIVE_MONTHS),
                confirm_day: Some(160),
                reason: Reason::Sickness,
                cause: Cause::Unlisted,
                age: 78,
                fraud: false,
            },
        ),
        case(
            "q3",
            "Hospitalized for sickness on day 150; no wellness visit; age 65.",
            Scenario {
                claim_day: days::FIVE_MONTHS,
                visit_day: None,
                confirm_day: None,
                reason: Reason::Sickness,
                cause: Cause::Unlisted,
                age: 65,
                fraud: false,
            },
        ),
        case(
            "q4",
            "Accidental injury on day 240; wellness visit day 180 but only \
             confirmed on day 244; age 30.",
            Scenario {
                claim_day: 240,
                visit_day: Some(180),
                confirm_day: Some(days::EIGHT_MONTHS),
                reason: Reason::AccidentalInjury,
                cause: Cause::Unlisted,
                age: 30,
                fraud: false,
            },
        ),
        case(
            "q5",
            "Hospitalized on day 100 after deliberately injuring themself; \
             age 25.",
            Scenario {
                claim_day: 100,
                visit_day: None,
                confirm_day: None,
                reason: Reason::IntentionalInjury,
                cause: Cause::Unlisted,
                age: 25,
                fraud: false,
            },
        ),
        case(
            "q6",
            "Injured skydiving, hospitalized on day 200; wellness visit day \
             180 confirmed day 198; age 79.",
            Scenario {
                claim_day: 200,
                visit_day: Some(180),
                confirm_day: Some(days::SIX_AND_A_HALF_MONTHS),
                reason: Reason::AccidentalInjury,
                cause: Cause::Skydiving,
                age: 79,
                fraud: false,
            },
        ),
        case(
            "q7",
            "Hospitalized for sickness on day 100; wellness visit day 30 \
             confirmed day 60; age 75.",
            Scenario {
                claim_day: 100,
                visit_day: Some(30),
                confirm_day: Some(60),
                reason: Reason::Sickness,
                cause: Cause::Unlisted,
                age: 75,
                fraud: false,
            },
        ),
        case(
            "q8",
            "Injured during military service, hospitalized on day 100; age 40.",
            Scenario {
                claim_day: 100,
                visit_day: None,
                confirm_day: None,
                reason: Reason::AccidentalInjury,
                cause: Cause::MilitaryService,
                age: 40,
                fraud: false,
            },
        ),
        case(
            "q9",
            "Accidental injury on day 200; wellness visit day 180 confirmed \
             day 183; age 40.",
            Scenario {
                claim_day: 200,
                visit_day: Some(180),
                confirm_day: Some(days::SIX_MONTHS),
                reason: Reason::AccidentalInjury,
                cause: Cause::Unlisted,
                age: 40,
                fraud: false,
            },
        ),
    ]
}

/// A dense grid of scenarios concentrated on the contract's boundary values,
/// for differential comparison between this module and an executable
/// encoding. Visit and confirmation days are always concrete here because
/// the reference encoding takes them as numbers.
pub fn scenario_grid() -> Vec<Scenario> {
    let claim_days = [
        0,
        1,
        100,
        days::SIX_MONTHS,
        days::SIX_MONTHS + 1,
        days::SEVEN_MONTHS - 1,
        days::SEVEN_MONTHS,
        days::SEVEN_MONTHS + 1,
        240,
        days::POLICY_TERM - 1,
        days::POLICY_TERM,
    ];
    let visit_days = [0, 30, days::FIVE_MONTHS, days::SIX_MONTHS, days::SIX_MONTHS + 1];
    let reasons = [Reason::Sickness, Reason::AccidentalInjury, Reason::IntentionalInjury];
    let causes = [
        Cause::Unlisted,
        Cause::Skydiving,
        Cause::MilitaryService,
        Cause::FirefightingService,
        Cause::PoliceService,
    ];
    let ages = [30, 79, 80];
    let mut out = Vec::new();
    for &claim_day in &claim_days {
        for &visit in &visit_days {
            let confirm_days = [
                visit,
                days::SIX_AND_A_HALF_MONTHS,
                days::SEVEN_MONTHS,
                days::SEVEN_MONTHS + 1,
                days::EIGHT_MONTHS,
            ];
            for &confirm in &confirm_days {
                for &reason in &reasons {
                    for &cause in &causes {
                        for &age in &ages {
                            out.push(Scenario {
                                claim_day,
                                visit_day: Some(visit),
                                confirm_day: Some(confirm),
                                reason,
                                cause,
                                age,
                                fraud: false,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
