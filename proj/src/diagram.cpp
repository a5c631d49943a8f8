namespace tft {}
