"""Prompting the trained reference checkpoints: tags, user tags, negative tags.

Needs the reference run (built on first use, about two hours on one core):

    python demos/04_reference_generation.py [REFERENCE_DIR] [OUT_DIR]
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from soundseed.audio_io import write_wav
from soundseed.autoencoder import load_vae
from soundseed.conditioning import TimingSpec, load_encoder
from soundseed.diffusion import SampleRequest, generate_batch, load_diffusion
from soundseed.dsp import estimate_tempo, spectral_centroid
from soundseed.evaluation import CLASSES, load_classifier, toy_classifier
from soundseed.reference import reference_config, reference_run, stage_path

ref = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("runs/reference")
out = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(tempfile.mkdtemp(prefix="soundseed-gen-"))
reference_run(ref, seed=0)
cfg = reference_config(ref)
vae, enc = load_vae(stage_path(cfg, "vae"), cfg), load_encoder(stage_path(cfg, "encoder"), cfg)
model, clf = load_diffusion(stage_path(cfg, "diffusion"), cfg), load_classifier(stage_path(cfg, "classifier"), cfg)

prompts = {
    "high": dict(tags=["High"]),
    "low": dict(tags=["Low"]),
    "click-120": dict(tags=["Click-Track", "120 BPM"]),
    "sine": dict(tags=["Sine"]),
    "sine-not-click": dict(tags=["Sine"], negative_tags=["Click-Track"]),
    "sine+user-high": dict(tags=["Sine"], user_tags=["High"]),
}
n = 8
for name, prompt in prompts.items():
    reqs = [SampleRequest(**prompt, timing=TimingSpec(0.0, 4.096), seed=s) for s in range(n)]
    clips = generate_batch(reqs, model, vae, enc, cfg)
    for s, clip in enumerate(clips):
        write_wav(clip, out / f"{name}_{s}.wav")
    centroid = np.mean([spectral_centroid(c) for c in clips])
    posterior = np.mean([toy_classifier(c, clf) for c in clips], axis=0)
    tempos = [estimate_tempo(c) for c in clips]
    top = CLASSES[int(np.argmax(posterior))]
    print(f"{name:15s} centroid {centroid:6.0f} Hz  classifier top {top:12s} "
          f"click mass {posterior[CLASSES.index('click-track')]:.2f}  tempos {[t and round(t) for t in tempos]}")
print(f"\nWAV files in {out}")
