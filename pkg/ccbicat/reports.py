"""
Tabular summaries of law suite runs
"""

import logging
from pathlib import Path
from typing import Sequence, Union

import pandas as pd

from .harness import LawReport

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['Bicategory', 'Law', 'Status', 'Cases', 'Failures', 'First Failing Case']


def summarize(reports: Sequence[LawReport]) -> pd.DataFrame:
    """One row per suite, sorted by bicategory then law"""
    rows = []
    for report in reports:
        rows.append({
            'Bicategory': report.bicategory,
            'Law': report.law,
            'Status': report.status,
            'Cases': report.cases_run,
            'Failures': len(report.failures),
            'First Failing Case': report.failures[0].case_index if report.failures else None,
        })
    df = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    df['First Failing Case'] = df['First Failing Case'].astype('Int64')
    return df.sort_values(['Bicategory', 'Law']).reset_index(drop=True)


def totals_by_bicategory(reports: Sequence[LawReport]) -> pd.DataFrame:
    df = summarize(reports)
    grouped = df.groupby('Bicategory').agg(
        Suites=('Law', 'count'),
        Cases=('Cases', 'sum'),
        Failures=('Failures', 'sum'),
        Unsupported=('Status', lambda s: int((s == 'unsupported').sum())),
    )
    return grouped.reset_index()


def export_summary_csv(reports: Sequence[LawReport], filename: Union[str, Path]) -> bool:
    """Write the summary table; False when there is nothing to write"""
    if not reports:
        logger.warning("No reports to export")
        return False
    df = summarize(reports)
    df.to_csv(filename, index=False, encoding='utf-8')
    logger.info("Summary of %s suites exported to %s", len(df), filename)
    return True
