import json
import os
from typing import Dict, List, Optional

import pandas as pd

from modules.models import (FanoCertificate, SignVector, ToricCatalogEntry, ToricConditionReport,
                            ToricInvariants, ToricQuiverSpec)
from utils.constants import CATALOG_COLUMNS, CERTIFICATE_FIELDS
from utils.logger import logger


class ReportManager:
    """Turns result records into JSON-ready dicts and tabular exports"""

    def certificate_to_dict(self, certificate: FanoCertificate) -> dict:
        """Fields in CERTIFICATE_FIELDS order, plain ints and lists only"""
        values = {
            'status': certificate.status,
            'dimension': certificate.dimension,
            'picard_rank': certificate.picard_rank,
            'index': certificate.index,
            'theta': list(certificate.canonical_theta.theta),
            'witness': list(certificate.witness) if certificate.witness is not None else None,
            'notes': list(certificate.notes),
        }
        return {field: values[field] for field in CERTIFICATE_FIELDS}

    def sign_vector_to_dict(self, sv: SignVector) -> dict:
        """Run-length encoded: runs = [[sign, length], ...] over lex-ordered e"""
        return {
            'd': list(sv.d),
            'length': len(sv),
            'zero_count': sv.zero_count,
            'runs': [[sign, length] for sign, length in sv.runs],
        }

    def chamber_report_to_dict(self, report: dict) -> dict:
        result = dict(report)
        result['sign_vector'] = self.sign_vector_to_dict(report['sign_vector'])
        return result

    def spec_to_dict(self, spec: ToricQuiverSpec) -> dict:
        return {'n': spec.n, 'arrows': [list(arrow) for arrow in spec.arrows()]}

    def catalog_to_list(self, catalog: List[ToricCatalogEntry]) -> List[dict]:
        """JSON array of {spec, dim, rank, index} in catalog order"""
        return [{
            'spec': self.spec_to_dict(entry.spec),
            'dim': entry.invariants.dim,
            'rank': entry.invariants.rank,
            'index': entry.invariants.index,
        } for entry in catalog]

    def catalog_rows(self, catalog: List[ToricCatalogEntry]) -> List[dict]:
        """Flat rows for CSV/XLSX: arrows rendered as 'src->dst x mult' text"""
        rows = []
        for entry in catalog:
            arrows = "; ".join(f"{k}->{l} x{m}" for k, l, m in entry.spec.arrows())
            row = {
                'n': entry.spec.n,
                'arrows': arrows,
                'total_arrows': entry.spec.total_arrows,
                'dim': entry.invariants.dim,
                'rank': entry.invariants.rank,
                'index': entry.invariants.index,
            }
            rows.append({column: row[column] for column in CATALOG_COLUMNS})
        return rows

    def toric_check_report(self, spec: ToricQuiverSpec, conditions: ToricConditionReport,
                           invariants: ToricInvariants, certificate: FanoCertificate,
                           expected: Optional[tuple] = None,
                           vertex_order: Optional[List[int]] = None) -> dict:
        """
        Conditions, invariants and live certificate of one toric quiver.
        With vertex_order (spec vertex k = original vertex vertex_order[k]) failing_k is
        reported in the original labels.
        """
        failing_k = None
        if conditions.failing_k is not None:
            failing_k = list(conditions.failing_k)
            if vertex_order is not None:
                failing_k = sorted(vertex_order[k] for k in failing_k)

        report = {
            'spec': self.spec_to_dict(spec),
            'conditions_ok': conditions.ok,
            'failing_k': failing_k,
            'failing_reason': conditions.reason or None,
            'dim': invariants.dim,
            'rank': invariants.rank,
            'index': invariants.index,
            'certificate': self.certificate_to_dict(certificate),
            'agree': conditions.ok == certificate.certified,
        }
        if vertex_order is not None:
            report['vertex_order'] = list(vertex_order)
        if expected is not None:
            report['expected'] = list(expected)
            report['matches_expected'] = (invariants.dim, invariants.rank, invariants.index) == tuple(expected)
        return report

    def to_json(self, data) -> str:
        """Deterministic text: insertion order kept, no key sorting"""
        return json.dumps(data, indent=2)

    def export_records(self, rows: List[Dict], path: str, sheet_name: str = 'Report',
                       columns: Optional[List[str]] = None) -> str:
        """Write rows to .csv or .xlsx (openpyxl) with pandas; returns the path"""
        df = pd.DataFrame(rows, columns=columns)

        folder = os.path.dirname(os.path.abspath(path))
        os.makedirs(folder, exist_ok=True)

        if path.lower().endswith('.xlsx'):
            with pd.ExcelWriter(path, engine='openpyxl') as writer:
                df.to_excel(writer, index=False, sheet_name=sheet_name)

                # Auto-adjust column widths
                worksheet = writer.sheets[sheet_name]
                for column in worksheet.columns:
                    max_length = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
                    worksheet.column_dimensions[column[0].column_letter].width = min(max_length + 2, 50)
        else:
            df.to_csv(path, index=False)

        logger.info(f"Exported {len(rows)} rows to {path}")
        return path

    def export_catalog(self, catalog: List[ToricCatalogEntry], path: str) -> str:
        return self.export_records(self.catalog_rows(catalog), path,
                                   sheet_name='Toric Catalog', columns=CATALOG_COLUMNS)


# Create global instance
report_manager = ReportManager()
