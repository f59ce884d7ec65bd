from datetime import datetime
from functools import wraps

from flask import Blueprint, jsonify, request
from pydantic import ValidationError

from src.Calculus.utils.errors import (
    ExplorationBoundExceeded,
    IndeterminateError,
    SynthesisError,
)
from src.Commands.run_commands import commands
from src.Testing.utils.types import AxiomClass, AxiomId, AxiomTarget, LeqMethod, RunConfig

api_bp = Blueprint('api', __name__)

CONFIG_KEYS = ["calculus", "val", "bound", "mail_capacity", "abstraction"]

def handle_errors(f):
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            doc = f(*args, **kwargs)
            return jsonify({"status": "success", "data": doc.model_dump(mode="json")})
        except (ExplorationBoundExceeded, IndeterminateError) as e:
            return jsonify({"status": "error", "message": str(e)}), 422
        except SynthesisError as e:
            return jsonify({"status": "error", "message": str(e)}), 500
        except (ValidationError, ValueError, KeyError) as e:
            return jsonify({"status": "error", "message": str(e)}), 400
        except Exception as e:
            return jsonify({"status": "error", "message": str(e)}), 500
    return decorated_function

def _body():
    return request.get_json(silent=True) or {}

def _config(data) -> RunConfig:
    return RunConfig(**{k: data[k] for k in CONFIG_KEYS if data.get(k) is not None})

@api_bp.route('/health', methods=['GET'])
def health_check():
    """Simple health check endpoint"""
    return jsonify({"status": "healthy", "timestamp": datetime.now().isoformat()})

@api_bp.route('/parse', methods=['POST'])
@handle_errors
def api_parse():
    """
    Canonical forms of a definition file

    Request body should contain:
    - definitions (str): text of the definition file
    - calculus, val (optional): run configuration
    """
    data = _body()
    return commands.cmd_parse(data.get('definitions', ''), _config(data))

@api_bp.route('/lts', methods=['POST'])
@handle_errors
def api_lts():
    data = _body()
    return commands.cmd_lts(
        data.get('definitions', ''),
        data.get('name'),
        AxiomTarget(data.get('target', AxiomTarget.TERM.value)),
        _config(data),
        data.get('channels'),
    )

@api_bp.route('/must', methods=['POST'])
@handle_errors
def api_must():
    """
    Request body should contain:
    - definitions (str)
    - server, client (str): definition names or inline terms
    """
    data = _body()
    return commands.cmd_must(data.get('definitions', ''), data['server'], data['client'], _config(data))

@api_bp.route('/leq', methods=['POST'])
@handle_errors
def api_leq():
    """
    Request body should contain:
    - definitions (str)
    - p, q (str): definition names or inline terms
    - method (str, optional): alt or test, default alt
    - tests (list, optional): extra test definitions for the test method
    """
    data = _body()
    return commands.cmd_leq(
        data.get('definitions', ''),
        data['p'],
        data['q'],
        LeqMethod(data.get('method', LeqMethod.ALT.value)),
        _config(data),
        data.get('tests', []),
    )

@api_bp.route('/distinguish', methods=['POST'])
@handle_errors
def api_distinguish():
    data = _body()
    return commands.cmd_distinguish(data.get('definitions', ''), data['p'], data['q'], _config(data))

@api_bp.route('/axioms', methods=['POST'])
@handle_errors
def api_axioms():
    """
    Request body should contain:
    - definitions (str, optional) and name (str) for term, fw and toset targets
    - target (str): term, fw, multiset or toset
    - class (str, optional) or axioms (list, optional)
    - channels (list, optional): required by the multiset target
    """
    data = _body()
    axiom_class = AxiomClass(data['class']) if data.get('class') else None
    return commands.cmd_axioms(
        data.get('definitions', ''),
        data.get('name'),
        AxiomTarget(data.get('target', AxiomTarget.TERM.value)),
        _config(data),
        axiom_class,
        [AxiomId(a) for a in data.get('axioms', [])],
        data.get('channels'),
    )
