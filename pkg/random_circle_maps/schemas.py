# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Experiment configuration schemas."""

import hashlib
import json
from dataclasses import dataclass
from types import MappingProxyType

from marshmallow import (
    INCLUDE,
    Schema,
    ValidationError,
    fields,
    post_load,
    validate,
    validates_schema,
)

from .config import SECTIONS
from .errors import InvalidConfig
from .historic.schedule import RHO_RULES

HASHED_SECTIONS = ("family", "base", "solver", "conjugacy", "coding", "historic", "seeds")
"""Sections that determine numerical results."""


class FamilySchema(Schema):
    """Map family and hypothesis constants."""

    class Meta:
        """Family-specific parameters pass through."""

        unknown = INCLUDE

    name = fields.String(required=True)
    k = fields.Integer(validate=validate.Range(min=2))
    a = fields.Float(validate=validate.Range(min=0))
    epsilon = fields.Float(validate=validate.Range(min=0))
    delta0 = fields.Float(required=True, validate=validate.Range(min=0, min_inclusive=False))
    eta = fields.Float(required=True, validate=validate.Range(min=0, min_inclusive=False))
    b = fields.List(fields.Float(), required=True, validate=validate.Length(equal=2))
    omega_samples = fields.Integer(validate=validate.Range(min=8))
    x_samples = fields.Integer(validate=validate.Range(min=64))

    @validates_schema
    def validate_b(self, data, **kwargs):
        """``B`` must be an ordered pair."""
        b = data.get("b")
        if b and not b[0] < b[1]:
            raise ValidationError("b must satisfy b[0] < b[1]", "b")


class BaseSchema(Schema):
    """Noise base."""

    alpha = fields.Float(
        required=True,
        validate=validate.Range(min=0, max=1, min_inclusive=False, max_inclusive=False),
    )
    omega0 = fields.Float(load_default=0.0)


class SolverSchema(Schema):
    """Inverse branch solver."""

    tolerance = fields.Float(required=True, validate=validate.Range(min=1e-16))
    max_bisections = fields.Integer(required=True, validate=validate.Range(min=1))
    newton_steps = fields.Integer(load_default=5, validate=validate.Range(min=0))


class ConjugacySchema(Schema):
    """Conjugacy grids."""

    level = fields.Integer(required=True, validate=validate.Range(min=0))
    p_depth = fields.Integer(allow_none=True, load_default=None, validate=validate.Range(min=1))
    max_points = fields.Integer(required=True, validate=validate.Range(min=1))
    residual_samples = fields.Integer(load_default=4096, validate=validate.Range(min=1))


class CodingSchema(Schema):
    """Symbolic coding."""

    depth = fields.Integer(required=True, validate=validate.Range(min=1))
    word_length = fields.Integer(load_default=10, validate=validate.Range(min=1))
    point = fields.Float(load_default=0.3)
    chunk = fields.Integer(load_default=1024, validate=validate.Range(min=1))


class HistoricSchema(Schema):
    """Historic construction."""

    rule = fields.String(required=True, validate=validate.OneOf(sorted(RHO_RULES)))
    blocks = fields.Integer(required=True, validate=validate.Range(min=1))
    budget = fields.Integer(required=True, validate=validate.Range(min=1))
    q_omega = fields.Integer(validate=validate.Range(min=1))
    q_x = fields.Integer(validate=validate.Range(min=1))
    level = fields.Integer(validate=validate.Range(min=0))
    slack = fields.Float(validate=validate.Range(min=0))
    bins = fields.Integer(validate=validate.Range(min=1))
    past_points = fields.Integer(validate=validate.Range(min=1))
    witnesses = fields.Integer(validate=validate.Range(min=1))
    alpha_fraction = fields.Float(validate=validate.Range(min=0, max=1, min_inclusive=False))
    beta_fraction = fields.Float(validate=validate.Range(min=0, max=1, max_inclusive=False))
    batch_size = fields.Integer(validate=validate.Range(min=1))

    @validates_schema
    def validate_fractions(self, data, **kwargs):
        """Witness thresholds must be ordered."""
        if data.get("alpha_fraction", 0) >= data.get("beta_fraction", 1):
            raise ValidationError("alpha_fraction must be below beta_fraction")


class SeedsSchema(Schema):
    """Seeds."""

    point = fields.Integer(required=True, validate=validate.Range(min=0))
    sampling = fields.Integer(required=True, validate=validate.Range(min=0))


class OutputSchema(Schema):
    """Output location."""

    directory = fields.String(required=True)


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment configuration; sections are read-only mappings."""

    family: MappingProxyType
    base: MappingProxyType
    solver: MappingProxyType
    conjugacy: MappingProxyType
    coding: MappingProxyType
    historic: MappingProxyType
    seeds: MappingProxyType
    output: MappingProxyType
    workers: int = 1
    cache_enabled: bool = True
    cache_dir: str = None

    def to_dict(self):
        """Plain nested dict."""
        data = {name: dict(getattr(self, name)) for name in SECTIONS}
        data.update(
            workers=self.workers, cache_enabled=self.cache_enabled, cache_dir=self.cache_dir
        )
        return data

    @property
    def hash(self):
        """Hash of the sections that determine numerical results."""
        return config_hash(self)


class ExperimentConfigSchema(Schema):
    """A whole experiment."""

    family = fields.Nested(FamilySchema, required=True)
    base = fields.Nested(BaseSchema, required=True)
    solver = fields.Nested(SolverSchema, required=True)
    conjugacy = fields.Nested(ConjugacySchema, required=True)
    coding = fields.Nested(CodingSchema, required=True)
    historic = fields.Nested(HistoricSchema, required=True)
    seeds = fields.Nested(SeedsSchema, required=True)
    output = fields.Nested(OutputSchema, required=True)
    workers = fields.Integer(load_default=1, validate=validate.Range(min=1))
    cache_enabled = fields.Boolean(load_default=True)
    cache_dir = fields.String(allow_none=True, load_default=None)

    @post_load
    def make_config(self, data, **kwargs):
        """Freeze the loaded sections."""
        sections = {name: MappingProxyType(dict(data[name])) for name in SECTIONS}
        return ExperimentConfig(
            workers=data["workers"],
            cache_enabled=data["cache_enabled"],
            cache_dir=data["cache_dir"],
            **sections,
        )


def load_config(data):
    """Validate a nested dict into an :class:`ExperimentConfig`.

    :raises InvalidConfig: with the marshmallow messages.
    """
    try:
        return ExperimentConfigSchema().load(data)
    except ValidationError as e:
        raise InvalidConfig(e.messages) from e


def canonical_json(config):
    """Canonical serialization of the numerical sections."""
    data = config.to_dict()
    payload = {name: data[name] for name in HASHED_SECTIONS}
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def config_hash(config):
    """SHA-256 of :func:`canonical_json`."""
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()


def jsonify_schema(schema):
    """Marshmallow schema to dict."""
    schema_dict = {}

    custom_mapping = {
        fields.Str: "string",
        fields.String: "string",
        fields.Integer: "int",
        fields.Float: "float",
        fields.Boolean: "bool",
        fields.List: "array",
        fields.Dict: "object",
    }
    for field, field_type in schema.fields.items():
        if field_type.dump_only:
            continue

        field_type_name = field_type.__class__
        is_required = field_type.required

        if isinstance(field_type, fields.Nested):
            schema_dict[field] = {
                "type": "object",
                "required": is_required,
                "properties": jsonify_schema(field_type.schema),
            }
        elif isinstance(field_type, fields.List):
            schema_dict[field] = {
                "type": "array",
                "items": custom_mapping[field_type.inner.__class__],
                "required": is_required,
            }
        else:
            try:
                schema_dict[field] = {
                    "type": custom_mapping[field_type_name],
                    "required": is_required,
                }
            except KeyError:
                raise Exception(f"Unrecognised schema field {field}: {field_type_name}")

    return schema_dict
