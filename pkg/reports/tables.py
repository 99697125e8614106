# reports/tables.py
# Tab-separated text tables for the report files.


def _num(value, digits: int = 6) -> str:
    if value is None:
        return "NA"
    return f"{value:.{digits}g}" if abs(value) >= 1e-4 or value == 0 else f"{value:.{digits}e}"


def section(title: str) -> str:
    return f"\n# {title}\n"


def format_summary(name: str, stats) -> str:
    lines = [f"{name}", "n\tmean\tstd_dev\tmin\tmax\tskewness\texcess_kurtosis"]
    lines.append(
        "\t".join(
            [str(stats.n)]
            + [_num(v) for v in (stats.mean, stats.std_dev, stats.min, stats.max, stats.skewness, stats.excess_kurtosis)]
        )
    )
    return "\n".join(lines) + "\n"


def format_correlogram(rows) -> str:
    lines = ["lag\tacf\tpacf\tband"]
    for r in rows:
        lines.append(f"{r.lag}\t{r.acf:.4f}\t{r.pacf:.4f}\t{r.conf_band:.4f}")
    return "\n".join(lines) + "\n"


def format_test(result) -> str:
    dof = result.dof
    if isinstance(dof, tuple):
        dof = ", ".join(f"{d:g}" for d in dof)
    elif dof is not None:
        dof = f"{dof:g}"
    parts = [f"{result.name}: statistic = {result.statistic:.4f}"]
    if dof is not None:
        parts.append(f"df = {dof}")
    if result.lag is not None:
        parts.append(f"lag = {result.lag}")
    parts.append(f"p-value = {result.p_value:.4g}")
    line = ", ".join(parts)
    note = result.detail.get("p_value_note") if isinstance(result.detail, dict) else None
    return line + (f" ({note})" if note else "") + "\n"


def format_portmanteau(results, title: str) -> str:
    """Lag order / Chi-square statistic / P-value rows."""
    lines = [title, "Lag order\tChi-square statistic\tP-value"]
    for r in results:
        lines.append(f"{r.lag}\t{r.statistic:.4f}\t{r.p_value:.4g}")
    return "\n".join(lines) + "\n"


def format_coefficients(rows) -> str:
    lines = ["coefficient\testimate\tstd_error"]
    for row in rows:
        lines.append(f"{row['name']}\t{_num(row['value'])}\t{_num(row['std_error'])}")
    return "\n".join(lines) + "\n"


def format_forecast(steps, point, std_err, point_label: str = "Forecast", err_label: str = "Std. Error") -> str:
    """Steps as columns; one row of forecasts, one of standard errors."""
    lines = ["Step\t" + "\t".join(str(s) for s in steps)]
    lines.append(f"{point_label}\t" + "\t".join(_num(v) for v in point))
    lines.append(f"{err_label}\t" + "\t".join(_num(v) for v in std_err))
    return "\n".join(lines) + "\n"


def format_score_grid(grid, criterion: str) -> str:
    q_max = len(grid[0]) - 1
    lines = [f"{criterion.upper()}\tq=" + "\tq=".join(str(q) for q in range(q_max + 1))]
    for p, row in enumerate(grid):
        lines.append(f"p={p}\t" + "\t".join("failed" if v is None else f"{v:.3f}" for v in row))
    return "\n".join(lines) + "\n"


def format_granger(rows) -> str:
    lines = ["Null hypothesis\tF\tP-value\t"]
    for r in rows:
        lines.append(
            f"{r.cause} does not Granger-cause {r.effect}\t{r.result.statistic:.4f}\t{r.result.p_value:.4f}\t{r.stars}"
        )
    lines.append("*** p < 0.01, ** p < 0.05, * p < 0.10")
    return "\n".join(lines) + "\n"


def format_stability(report) -> str:
    lines = ["root\tmodulus"]
    for e, m in zip(report.eigenvalues, report.moduli):
        lines.append(f"{e.real:.6f}{e.imag:+.6f}i\t{m:.6f}")
    if report.stable:
        lines.append("All roots inside unit circle: the VAR is stable")
    else:
        lines.append("At least one root on or outside the unit circle: the VAR is not stable")
    return "\n".join(lines) + "\n"


def format_fevd(table) -> str:
    """One block per variable: Period / Standard deviation / shares."""
    blocks = []
    for name in table.names:
        lines = [f"Variance decomposition of {name}", "Period\tS.E.\t" + "\t".join(table.names)]
        for period, std, *shares in table.rows_for(name):
            lines.append(f"{period}\t{_num(std)}\t" + "\t".join(f"{s:.4f}" for s in shares))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
