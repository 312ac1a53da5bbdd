# This file is intentionally left empty to mark the directory as a Python package
# and allow test discovery.
