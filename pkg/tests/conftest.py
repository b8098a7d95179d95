import os

# keep a user's ~/.condenlab/config.yaml out of the test run; must happen before condenlab is imported
os.environ["CONDENLAB_CONFIG"] = os.path.join(os.path.dirname(__file__), "no_such_config.yaml")
