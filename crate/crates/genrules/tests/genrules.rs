use hypca_genrules::*;
use hypca_rulecore::{expand_context, parse_rules, Rule, RuleError, RuleTable, State};

fn rule(text: &str) -> Rule {
    let w: Vec<&str> = text.split_whitespace().collect();
    Rule::new(w[0].parse().unwrap(), expand_context(w[1]).unwrap(), w[3].parse().unwrap())
}

fn contains(rules: &[GeneratedRule], r: &Rule) -> bool {
    rules.iter().any(|g| g.rule.key() == r.key() && g.rule.next == r.next)
}

fn runs_of_black(ctx: &[State]) -> Vec<usize> {
    // cyclic runs: start after a white cell
    let Some(w) = ctx.iter().position(|&s| s == State::W) else { return vec![ctx.len()] };
    let mut runs = Vec::new();
    let mut cur = 0;
    for i in 1..=ctx.len() {
        if ctx[(w + i) % ctx.len()] == State::B {
            cur += 1;
        } else if cur > 0 {
            runs.push(cur);
            cur = 0;
        }
    }
    runs
}

#[test]
fn shipped_p13_loads_without_conflict() {
    let table = shipped_p13();
    assert_eq!(table.p(), 13);
    let rows = P13_RULES.lines().filter(|l| l.starts_with("W ") || l.starts_with("B ")).count();
    assert_eq!(table.len(), rows, "every line is a distinct canonical rule");
}

#[test]
fn p13_rules_carry_provenance() {
    for (_, stored) in shipped_p13().iter() {
        assert!(!stored.provenance.starts_with("line "), "{}", stored.rule);
    }
}

#[test]
fn p13_track_rule() {
    let table = shipped_p13();
    let ctx = expand_context("BBWBWBW^7").unwrap();
    assert_eq!(table.lookup(State::W, &ctx).unwrap(), State::W);
}

#[test]
fn p13_loader_rejects_other_p() {
    assert_eq!(load_p13_ruleset("p=7\nW W^7 -> W").unwrap_err(), GenError::WrongP { expected: 13, found: 7 });
    assert!(matches!(load_p13_ruleset("p=13\nW BW^13 -> W"), Err(GenError::Rule(RuleError::LengthError { .. }))));
}

#[test]
fn template_parse_and_instantiate() {
    let t: RuleTemplate = "W BWWBWWWBW^k -> W".parse().unwrap();
    assert_eq!(t.to_string(), "W BWWBWWWBW^k -> W");
    assert_eq!(t.instantiate(17).unwrap(), rule("W BWWBWWWBW^9 -> W"));
    let c: RuleTemplate = "W BBWWWBW^jBWW -> W".parse().unwrap();
    assert_eq!(c.instantiate(19).unwrap().context.len(), 19);
    assert_eq!(c.instantiate(13), Err(GenError::UnsupportedP(13)));
    assert!("W BQ -> W".parse::<RuleTemplate>().is_err());
    assert!("W BW^k W".parse::<RuleTemplate>().is_err());
}

#[test]
fn track_rules_at_p17() {
    let rules = generate_track_rules(17).unwrap();
    assert!(contains(&rules, &rule("W BWWBWWWBW^9 -> W")));
    assert!(contains(&rules, &rule("W BBWWWBW^8BWW -> W")));
    // a non-minimal presentation is found through its rotated image
    let table = generate_table(17, &[Family::Tracks]).unwrap();
    let rotated = expand_context("BWWWBW^9BWW").unwrap();
    assert!(table.get(State::W, &rotated).is_some() || table.lookup(State::W, &rotated).is_ok());
}

#[test]
fn track_rules_differ_only_in_spacer() {
    let a = generate_track_rules(17).unwrap();
    let b = generate_track_rules(19).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.provenance, y.provenance);
        assert_eq!((x.rule.current, x.rule.next), (y.rule.current, y.rule.next));
        // deleting two whites from the longest white run gives back p=17
        let ctx = &y.rule.context;
        let (mut best, mut best_len, mut i) = (0, 0, 0);
        while i < ctx.len() {
            let j = (i..ctx.len()).find(|&j| ctx[j] != ctx[i]).unwrap_or(ctx.len());
            if ctx[i] == State::W && j - i > best_len {
                best = i;
                best_len = j - i;
            }
            i = j;
        }
        let mut shrunk = ctx.clone();
        shrunk.drain(best..best + 2);
        assert_eq!(shrunk, x.rule.context, "{}", x.provenance);
    }
}

#[test]
fn crossing_type_words() {
    let rules = generate_crossing_rules(17).unwrap();
    for (kind, word) in
        [("xB", "BBBBWWBWW"), ("xC", "BBBBWWWBW"), ("xBC", "BBBBWWBBW"), ("xBF", "BBBBWWWWB"), ("xCE", "BBBBWWBWB")]
    {
        let expected = expand_context(word).unwrap();
        let ours: Vec<_> = rules.iter().filter(|g| g.provenance.starts_with(&format!("{kind} "))).collect();
        assert!(!ours.is_empty(), "{kind}");
        assert!(ours.iter().all(|g| g.rule.context.starts_with(&expected)), "{kind}");
    }
}

#[test]
fn every_kind_has_situations() {
    let sits = shipped_situations();
    for k in kinds() {
        assert!(sits.iter().any(|s| s.kind == k.name), "{}", k.name);
    }
    assert!(sits.iter().all(|s| kind(&s.kind).is_ok()));
}

#[test]
fn generated_contexts_have_length_p() {
    for p in [17, 18, 19, 23, 30] {
        for g in generate(p, &Family::ALL).unwrap() {
            assert_eq!(g.rule.context.len(), p, "{}", g.provenance);
        }
    }
}

#[test]
fn anchor_discipline() {
    for p in [17, 19, 23] {
        for g in generate(p, &Family::ALL).unwrap() {
            let long = runs_of_black(&g.rule.context).into_iter().filter(|&r| r >= 4).count();
            let track = g.provenance.starts_with("track");
            assert_eq!(long, if track { 0 } else { 1 }, "p={p} {}", g.provenance);
        }
    }
}

#[test]
fn unions_are_conflict_free() {
    for p in [17, 19, 23] {
        let table = generate_table(p, &Family::ALL).unwrap();
        assert!(table.len() > 150);
        let total = generate(p, &Family::ALL).unwrap().len();
        assert!(table.len() <= total);
    }
}

#[test]
fn unsupported_p() {
    for p in [7, 13, 16] {
        assert_eq!(generate_track_rules(p).unwrap_err(), GenError::UnsupportedP(p));
        assert_eq!(generate_table(p, &Family::ALL).unwrap_err(), GenError::UnsupportedP(p));
    }
}

#[test]
fn emitted_rules_parse_back() {
    let rules = generate(19, &Family::ALL).unwrap();
    let text = emit_rules(19, &rules);
    let parsed = parse_rules(&text).unwrap();
    let table = generate_table(19, &Family::ALL).unwrap();
    assert_eq!(parsed.dump(), table.dump());
}

#[test]
fn situations_are_deterministic() {
    let sits = shipped_situations();
    for (i, a) in sits.iter().enumerate() {
        let k = kind(&a.kind).unwrap();
        assert_eq!(a.roles.len(), k.roles().len(), "{}", a.to_line());
        for b in &sits[i + 1..] {
            if (&a.kind, a.current, &a.roles) == (&b.kind, b.current, &b.roles) {
                panic!("duplicate situation {} / {}", a.to_line(), b.to_line());
            }
        }
    }
    assert_eq!(parse_situations(&sits.iter().map(|s| s.to_line() + "\n").collect::<String>()).unwrap(), sits);
}

#[test]
fn situation_syntax_errors() {
    let err = parse_situations("xB W WWBBW -> W\nxB W WWQBW -> W").unwrap_err();
    assert!(matches!(err, GenError::BadData { line: 2, .. }), "{err}");
    assert!(matches!(parse_situations("xB W -> W"), Err(GenError::BadData { line: 1, .. })));
}

#[test]
fn kind_layouts_fit_p17() {
    for k in kinds() {
        assert!(k.width() <= 17, "{}", k.name);
        assert_eq!(k.tokens.iter().filter(|t| **t == Token::Spacer).count(), 1);
        let roles = vec![State::W; k.roles().len()];
        assert_eq!(k.context(17, &roles).unwrap().len(), 17);
    }
    assert!(matches!(kind("nope"), Err(GenError::UnknownKind(_))));
}

#[test]
fn family_names_round_trip() {
    for f in Family::ALL {
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
    assert!("all".parse::<Family>().is_err());
}

#[test]
fn tables_from_families_merge_cleanly() {
    let mut table = RuleTable::new(17);
    for f in Family::ALL {
        table.merge(&generate_table(17, &[f]).unwrap()).unwrap();
    }
    assert_eq!(table.dump(), generate_table(17, &Family::ALL).unwrap().dump());
}
