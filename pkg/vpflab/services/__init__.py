"""
Services for vpflab
"""

from vpflab.services.distortion_service import DistortionService
from vpflab.services.pipeline_service import SynthPipelineService, vpf_difference

__all__ = ["DistortionService", "SynthPipelineService", "vpf_difference"]
