"""Tempo and spectral-centroid estimates on synthetic clips.

    python demos/02_tempo_and_spectrum.py
"""

import numpy as np

from soundseed.audio_io import AudioClip, SynthSpec, synth_clip
from soundseed.dsp import estimate_tempo, spectral_centroid

print("click-track tempo (folded into [70, 180) BPM)")
for bpm in (60, 90, 120, 150, 180, 240):
    clip, _ = synth_clip(SynthSpec("click-track", 8.0, 0.8, bpm=bpm, seed=bpm))
    print(f"  {bpm:3d} BPM -> {estimate_tempo(clip):6.1f}")

silence = AudioClip(np.zeros(3 * 8000, dtype=np.float32), 8000)
print(f"  silence -> {estimate_tempo(silence)}")

print("\nspectral centroid by register")
for kind in ("sine", "square", "chord"):
    for pitch in (220.0, 700.0):
        clip, tags = synth_clip(SynthSpec(kind, 1.0, 0.5, pitch_hz=pitch, seed=1))
        print(f"  {kind:6s} {pitch:5.0f} Hz {tags.to_list()!s:24s} centroid {spectral_centroid(clip):6.0f} Hz")
