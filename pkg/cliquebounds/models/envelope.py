"""Data model for the command-line output envelope."""
import json
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field

from cliquebounds.config import OUTPUT_CONFIG

import logging
logger = logging.getLogger(__name__)


class OutputEnvelope(BaseModel):
    """Every JSON document the command line prints."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    command: List[str] = Field(..., description="Echo of the subcommand and its arguments")
    version: str = Field(..., description="Library version")
    schema_version: str = Field(default=OUTPUT_CONFIG["schema_version"], alias="schema")
    rational_policy: str = Field(default=OUTPUT_CONFIG["rational_policy"])
    ok: bool = Field(default=True, description="False for error envelopes")
    payload: Any = Field(..., description="JSON-safe payload: strings for numbers, 'p/q' for rationals")

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputEnvelope":
        return cls.model_validate(json.loads(text))
