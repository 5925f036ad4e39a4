from typing import Literal

from pydantic import BaseModel, Field, field_validator


class ChimeraSpec(BaseModel):
	L: int = Field(4, ge=1)
	M: int = Field(1, ge=1)
	N: int = Field(1, ge=1)


class PegasusSpec(BaseModel):
	"""Cell half-size and layer count are fixed at 4 and 3."""

	L: int = 4
	M: int = Field(1, ge=1)
	N: int = Field(1, ge=1)
	O: int = 3

	@field_validator("L")
	@classmethod
	def check_half_size(cls, v: int) -> int:
		if v != 4:
			raise ValueError(f"Pegasus cells are K_4,4; L must be 4, got {v}")
		return v

	@field_validator("O")
	@classmethod
	def check_layers(cls, v: int) -> int:
		if v != 3:
			raise ValueError(f"Pegasus has 3 layers; O must be 3, got {v}")
		return v


class ErdosRenyiSpec(BaseModel):
	nu: int = Field(ge=1)
	p: float = Field(ge=0.0, le=1.0)
	seed: int = 0


class StructuredSpec(BaseModel):
	zeta: int = Field(0, ge=0, le=4)
	p_inter: float = Field(0.5, ge=0.0, le=1.0)
	p_intra: float = Field(0.5, ge=0.0, le=1.0)
	cells: Literal[2, 4] = 2
	seed: int = 0
	max_retries: int = Field(100, ge=1)
