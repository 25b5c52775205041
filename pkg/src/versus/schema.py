"""JSON Schemas for the service's response bodies.

These are the published wire contracts; the test suite validates fuzzed
responses against them and UI clients may do the same.
"""

_SCORED_SENTENCE = {
    "type": "object",
    "required": ["sentence_id", "document_id", "position", "text", "label",
                 "confidence", "model", "negation_applied", "e", "s", "winner",
                 "matched_aspects"],
    "properties": {
        "sentence_id": {"type": "integer", "minimum": 0},
        "document_id": {"type": "string"},
        "position": {"type": "integer", "minimum": 0},
        "text": {"type": "string", "minLength": 1},
        "label": {"enum": ["BETTER", "WORSE", "EQUAL", "NONE"]},
        "confidence": {"type": "number", "minimum": 0, "maximum": 1},
        "model": {"enum": ["DEFAULT", "BOW"]},
        "negation_applied": {"type": "boolean"},
        "e": {"type": "number", "minimum": 0},
        "s": {"type": "number", "minimum": 0},
        "winner": {"enum": ["OBJECT_A", "OBJECT_B", "NONE"]},
        "matched_aspects": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["text", "weight"],
                "properties": {
                    "text": {"type": "string"},
                    "weight": {"type": "integer", "minimum": 1, "maximum": 5},
                },
            },
        },
    },
}

COMPARISON_RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["object_a", "object_b", "model", "fast_mode", "winner", "totals",
                 "score_bar", "pro_a", "pro_b", "neutral", "generated_aspects"],
    "properties": {
        "object_a": {"type": "string"},
        "object_b": {"type": "string"},
        "model": {"enum": ["DEFAULT", "BOW"]},
        "fast_mode": {"type": "boolean"},
        "winner": {"enum": ["OBJECT_A", "OBJECT_B", "TIE"]},
        "totals": {
            "type": "object",
            "required": ["total_a", "total_b", "per_aspect"],
            "properties": {
                "total_a": {"type": "number", "minimum": 0},
                "total_b": {"type": "number", "minimum": 0},
                "per_aspect": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["text", "weight", "total_a", "total_b"],
                        "properties": {
                            "text": {"type": "string"},
                            "weight": {"type": "integer", "minimum": 1, "maximum": 5},
                            "total_a": {"type": "number", "minimum": 0},
                            "total_b": {"type": "number", "minimum": 0},
                        },
                    },
                },
            },
        },
        "score_bar": {
            "type": "object",
            "required": ["a", "b"],
            "properties": {
                "a": {"type": "number", "minimum": 0, "maximum": 1},
                "b": {"type": "number", "minimum": 0, "maximum": 1},
            },
        },
        "pro_a": {"type": "array", "items": _SCORED_SENTENCE},
        "pro_b": {"type": "array", "items": _SCORED_SENTENCE},
        "neutral": {"type": "array", "items": _SCORED_SENTENCE},
        "generated_aspects": {
            "type": "array",
            "maxItems": 10,
            "items": {
                "type": "object",
                "required": ["phrase", "method", "count_a", "count_b", "assigned"],
                "properties": {
                    "phrase": {"type": "string", "minLength": 1},
                    "method": {"enum": ["COMP_ADJ", "COMP_PHRASE", "PATTERN"]},
                    "count_a": {"type": "integer", "minimum": 0},
                    "count_b": {"type": "integer", "minimum": 0},
                    "assigned": {"enum": ["OBJECT_A", "OBJECT_B"]},
                },
            },
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}

CONTEXT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["document_id", "target_id", "sentences"],
    "properties": {
        "document_id": {"type": "string"},
        "target_id": {"type": "integer", "minimum": 0},
        "sentences": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["sentence_id", "position", "text", "is_target"],
                "properties": {
                    "sentence_id": {"type": "integer", "minimum": 0},
                    "position": {"type": "integer", "minimum": 0},
                    "text": {"type": "string"},
                    "is_target": {"type": "boolean"},
                },
            },
        },
    },
}

HEALTH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["index", "model", "documents", "sentences"],
    "properties": {
        "index": {"enum": ["loaded", "absent"]},
        "model": {"enum": ["loaded", "absent"]},
        "documents": {"type": "integer", "minimum": 0},
        "sentences": {"type": "integer", "minimum": 0},
        "tokens": {"type": "integer", "minimum": 0},
    },
}

ERROR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["error"],
    "properties": {
        "error": {
            "type": "object",
            "required": ["code", "message"],
            "properties": {
                "code": {"type": "string"},
                "message": {"type": "string"},
                "details": {},
            },
        },
    },
}
