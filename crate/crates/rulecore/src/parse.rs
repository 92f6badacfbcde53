use crate::{Rule, RuleError, RuleTable, State};

/// Parses a condensed neighbourhood such as `BBWBWBW^7` into its states.
/// Returns a message on malformed input; the length is not checked here.
pub fn expand_context(text: &str) -> Result<Vec<State>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let st = State::from_char(c).ok_or_else(|| format!("unexpected {c:?} in context"))?;
        let mut count = 1usize;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                digits.push(d);
                chars.next();
            }
            count = digits.parse().map_err(|_| format!("missing exponent after {c}^"))?;
            if count == 0 {
                return Err(format!("zero exponent after {c}^"));
            }
        }
        out.extend(std::iter::repeat_n(st, count));
    }
    Ok(out)
}

/// Like [`expand_context`] but also checks the length against `p`.
pub fn parse_context(text: &str, p: usize) -> Result<Vec<State>, RuleError> {
    let ctx = expand_context(text).map_err(|msg| RuleError::SyntaxError { line: 0, msg })?;
    if ctx.len() != p {
        return Err(RuleError::LengthError { line: 0, expected: p, found: ctx.len() });
    }
    Ok(ctx)
}

/// Condensed form: runs of three or more identical states use exponents.
pub fn format_context(ctx: &[State]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < ctx.len() {
        let mut j = i;
        while j < ctx.len() && ctx[j] == ctx[i] {
            j += 1;
        }
        let run = j - i;
        if run >= 3 {
            out.push_str(&format!("{}^{}", ctx[i], run));
        } else {
            for _ in 0..run {
                out.push(ctx[i].as_char());
            }
        }
        i = j;
    }
    out
}

pub fn format_rule(rule: &Rule) -> String {
    format!("{} {} -> {}", rule.current, format_context(&rule.context), rule.next)
}

/// Parses a rule file.
///
/// ```text
/// p=13
/// W BBWBWBW^7 -> W   # tracks
/// ```
///
/// A `p=<int>` header must precede the rules. A trailing comment becomes
/// the rule's provenance tag; rules without one are tagged by line.
pub fn parse_rules(text: &str) -> Result<RuleTable, RuleError> {
    let mut table: Option<RuleTable> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b.trim(), c.trim()),
            None => (raw.trim(), ""),
        };
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("p=") {
            if table.is_some() {
                return Err(RuleError::SyntaxError { line, msg: "duplicate p= header".into() });
            }
            let p: usize = rest
                .trim()
                .parse()
                .map_err(|_| RuleError::SyntaxError { line, msg: format!("bad header {body:?}") })?;
            table = Some(RuleTable::new(p));
            continue;
        }
        let Some(table) = table.as_mut() else {
            return Err(RuleError::SyntaxError { line, msg: "rule before the p= header".into() });
        };
        let rule = parse_rule_line(body, table.p()).map_err(|e| with_line(e, line))?;
        let provenance = if comment.is_empty() { format!("line {line}") } else { comment.to_string() };
        table.insert_rule(rule, provenance)?;
    }
    table.ok_or(RuleError::SyntaxError { line: 0, msg: "missing p= header".into() })
}

fn parse_rule_line(body: &str, p: usize) -> Result<Rule, RuleError> {
    let syntax = |msg: String| RuleError::SyntaxError { line: 0, msg };
    let (lhs, rhs) = body.split_once("->").ok_or_else(|| syntax("missing '->'".into()))?;
    let mut parts = lhs.split_whitespace();
    let (Some(cur), Some(ctx), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(syntax(format!("expected '<state> <context> -> <state>', got {body:?}")));
    };
    let current: State = cur.parse().map_err(syntax)?;
    let next: State = rhs.trim().parse().map_err(syntax)?;
    let context = parse_context(ctx, p)?;
    Ok(Rule::new(current, context, next))
}

fn with_line(err: RuleError, line: usize) -> RuleError {
    match err {
        RuleError::SyntaxError { msg, .. } => RuleError::SyntaxError { line, msg },
        RuleError::LengthError { expected, found, .. } => RuleError::LengthError { line, expected, found },
        other => other,
    }
}
