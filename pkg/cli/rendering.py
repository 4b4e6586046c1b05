"""Human-readable text for the barter commands. JSON output goes through the serializers instead."""
from exchanges.serializers import render_number


def format_number(value, decimal=False):
    rendered = render_number(value, decimal=decimal)
    if isinstance(rendered, float):
        return f"{rendered:.6f}"
    return str(rendered)


def format_point(point, decimal=False):
    return f"({format_number(point.u_x, decimal)}, {format_number(point.u_y, decimal)})"


def format_exchange(instance, exchange):
    if exchange.is_null:
        return 'no exchange'
    gives_x = ', '.join(instance.names_in(exchange.give_x)) or 'nothing'
    gives_y = ', '.join(instance.names_in(exchange.give_y)) or 'nothing'
    return f"X gives {gives_x}; Y gives {gives_y}"


def report_lines(report, instance, decimal=False):
    headline = f"{report.algorithm}: {format_point(report.headline, decimal)}"
    if report.objective_value is not None:
        headline += f"  objective {format_number(report.objective_value, decimal)}"
    if report.is_lottery:
        headline += '  (lottery)'
    yield headline

    if report.tie_count > 1:
        tied = ', '.join(format_point(point, decimal) for point in report.chosen)
        yield f"  {report.tie_count} tied points: {tied}"
    for point, support, exchanges in zip(report.chosen, report.support, report.achieving_exchanges):
        if report.is_lottery:
            mixed = ' and '.join(format_point(p, decimal) for p in support)
            yield f"  {format_point(point, decimal)} mixes {mixed}"
        for exchange in exchanges:
            yield f"  {format_point(point, decimal)} {format_exchange(instance, exchange)}"


def certificate_lines(certificate, decimal=False):
    yield f"certificate: {certificate.kind}"
    if len(certificate.fired) > 1:
        yield f"  also fired: {', '.join(str(kind) for kind in certificate.fired[1:])}"
    for kind, evidence in (certificate.witness or {}).items():
        yield f"  {kind}: {_format_witness(evidence, decimal)}"
    if certificate.brute_force_verified:
        outcome = 'no profitable exchange' if certificate.periphery_empty else 'profitable exchanges exist'
        yield f"  brute force over {certificate.exchanges_checked} exchanges: {outcome}"
    else:
        yield '  brute force skipped (over the enumeration limit)'


def _format_witness(value, decimal):
    if isinstance(value, dict):
        return ', '.join(f"{key}={_format_witness(item, decimal)}" for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(_format_witness(item, decimal) for item in value) + ']'
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, (int, float)) or hasattr(value, 'denominator'):
        return format_number(value, decimal)
    return str(value)


def summary_lines(summary, decimal=False):
    yield f"p={summary['p']} q={summary['q']}"
    yield f"exchanges: {summary['total_exchanges']}"
    yield f"distinct points: {summary['distinct_points']}"
    yield f"collapse ratio: {format_number(summary['collapse_ratio'], decimal)}"
    yield f"acceptable exchanges: {summary['acceptable_exchanges']}"
    yield f"periphery points: {len(summary['periphery'])}"
