"""Train every stage for a handful of steps on a tiny config, then generate.

This shows the data flow end to end in about a minute; the models are far too
small and short-trained to sound like anything. See demos/04 for the trained
reference checkpoints.

    python demos/03_tiny_pipeline.py
"""

import tempfile
from pathlib import Path

from soundseed.audio_io import synth_corpus
from soundseed.autoencoder import load_vae, reconstruction_snr, train_autoencoder
from soundseed.conditioning import TimingSpec, build_vocabulary, load_encoder, train_joint_encoder
from soundseed.config import Config
from soundseed.corpus import load_corpus, split
from soundseed.diffusion import SampleRequest, generate, load_diffusion, train_diffusion
from soundseed.tagging import Gazetteer

root = Path(tempfile.mkdtemp(prefix="soundseed-tiny-"))
cfg = Config.from_dict({
    "audio": {"clip_samples": 8192},
    "vae": {"latent_channels": 4, "widths": [8, 8, 8, 8, 8, 16], "groups": 4, "train_samples": 1024},
    "encoder": {"prompt_dim": 48, "table_dim": 16, "hidden": 32, "batch_size": 8},
    "diffusion": {"widths": [16, 32], "emb_dim": 32, "groups": 4, "attention_heads": 2, "batch_size": 4},
}, base_dir=root)

synth_corpus(root / "corpus", hours=0.02, seed=0)
train, held = split(load_corpus(cfg.path("audio", "manifest"), 8000), cfg.audio.holdout_fraction)
print(f"{len(train)} training tracks, {len(held)} held out")

vae_ckpt, vae_log = train_autoencoder(train, cfg, 60, seed=0)
vae = load_vae(vae_ckpt, cfg)
print(f"vae: l2 {vae_log.window_mean('l2', first=True, n=1):.4f} -> {vae_log.window_mean('l2', first=False, n=1):.4f}, "
      f"held-out SNR {reconstruction_snr(vae, [t.clip for t in held], 8192):.1f} dB")

vocab = build_vocabulary(Gazetteer.load(), train)
enc_ckpt, enc_log = train_joint_encoder(train, cfg, 60, seed=0, vocabulary=vocab)
enc = load_encoder(enc_ckpt, cfg)
print(f"encoder: InfoNCE {enc_log.window_mean('loss', first=True, n=1):.3f} -> "
      f"{enc_log.window_mean('loss', first=False, n=1):.3f}")

diff_ckpt, diff_log = train_diffusion(train, vae, enc, cfg, 60, seed=0)
model = load_diffusion(diff_ckpt, cfg)
print(f"diffusion: v-mse {diff_log.window_mean('mse', first=True, n=1):.3f} -> "
      f"{diff_log.window_mean('mse', first=False, n=1):.3f}")

req = SampleRequest(tags=["Sine", "High"], negative_tags=["Click-Track"], timing=TimingSpec(0.0, 1.0), steps=10)
clip = generate(req, model, vae, enc, cfg)
print(f"generated {clip.duration_s:.3f} s for {req.to_record()}")
